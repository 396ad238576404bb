#include "npwsd/fixture.hpp"

#include <filesystem>
#include <random>
#include <sstream>
#include <vector>

#include "npwsd/errors.hpp"
#include "npwsd/util.hpp"
#include "npwsd/xml.hpp"

namespace npwsd {

namespace {

// std::uniform_int_distribution is not bit-stable across standard
// libraries; plain modulo keeps fixture bytes identical everywhere.
std::size_t pick(std::mt19937& rng, std::size_t n) { return rng() % n; }

template <typename T>
void shuffle_lines(std::vector<T>& v, std::mt19937& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[pick(rng, i)]);
}

const std::vector<std::string> kEnglishNoiseNouns = {
    "cromble", "drazzle", "fimbrel", "gorwick", "hesprin",
    "jolprit", "karviol", "limstok", "morvane", "nubrick"};

const std::vector<std::string> kSpanishNoiseNouns = {
    "brunza", "colpera", "drimona", "esquillo", "farnela",
    "gorbina", "jilvana", "lumbreta", "morvida", "trazpol"};

std::string src_corpus(std::mt19937& rng, int noise_sentences) {
  std::vector<std::string> lines;
  for (int i = 0; i < 8; ++i) lines.push_back("the head of the family spoke.");
  for (int i = 0; i < 50; ++i)
    lines.push_back(pick(rng, 2) == 0 ? "it is a year old." : "it was a year old.");
  lines.push_back("a friend of mine stayed.");
  for (int i = 0; i < 3; ++i) lines.push_back("the art studies continue.");
  for (int i = 0; i < 5; ++i) lines.push_back("a number of voters agreed.");
  for (int i = 0; i < 2; ++i) lines.push_back("the free trade agreement passed.");
  for (int i = 0; i < noise_sentences; ++i) {
    const std::string n1 = kEnglishNoiseNouns[pick(rng, kEnglishNoiseNouns.size())];
    const std::string n2 = kEnglishNoiseNouns[pick(rng, kEnglishNoiseNouns.size())];
    lines.push_back(pick(rng, 2) == 0 ? "the " + n1 + " of the " + n2 + " appeared."
                                      : "a " + n1 + " " + n2 + " vanished.");
  }
  shuffle_lines(lines, rng);
  return join(lines, "\n") + "\n";
}

std::string tgt_corpus(std::mt19937& rng, int noise_sentences) {
  std::vector<std::string> lines;
  for (int i = 0; i < 9; ++i) lines.push_back("el responsable de la cámara habló.");
  for (int i = 0; i < 60; ++i)
    lines.push_back(pick(rng, 2) == 0 ? "tiene un año de edad." : "tenía un año de edad.");
  lines.push_back("el conocido de las minas llegó.");
  for (int i = 0; i < 4; ++i)
    lines.push_back(pick(rng, 2) == 0 ? "los estudios de arte siguen."
                                      : "el estudio del arte sigue.");
  for (int i = 0; i < 7; ++i) lines.push_back("el número de votantes subió.");
  for (int i = 0; i < 2; ++i) lines.push_back("el tratado de libre comercio pasó.");
  for (int i = 0; i < noise_sentences; ++i) {
    const std::string n1 = kSpanishNoiseNouns[pick(rng, kSpanishNoiseNouns.size())];
    const std::string n2 = kSpanishNoiseNouns[pick(rng, kSpanishNoiseNouns.size())];
    lines.push_back(pick(rng, 2) == 0 ? "el " + n1 + " de la " + n2 + " apareció."
                                      : "una " + n1 + " " + n2 + " pasó.");
  }
  shuffle_lines(lines, rng);
  return join(lines, "\n") + "\n";
}

std::string src_lexicon() {
  std::ostringstream out;
  out << "# surface<TAB>lemma<TAB>pos\n"
      << "a\ta\tdeterminer\n"
      << "agreed\tagree\tverb\n"
      << "agreement\tagreement\tnoun\n"
      << "and\tand\tconjunction\n"
      << "appeared\tappear\tverb\n"
      << "art\tart\tnoun\n"
      << "continue\tcontinue\tverb\n"
      << "family\tfamily\tnoun\n"
      << "free\tfree\tadjective\n"
      << "friend\tfriend\tnoun\n"
      << "head\thead\tnoun\n"
      << "is\tbe\tverb\n"
      << "it\tit\tother\n"
      << "mine\tmine\tnoun\n"
      << "number\tnumber\tnoun\n"
      << "of\tof\tpreposition\n"
      << "old\told\tadjective\n"
      << "passed\tpass\tverb\n"
      << "spoke\tspeak\tverb\n"
      << "stayed\tstay\tverb\n"
      << "studies\tstudy\tnoun\n"
      << "study\tstudy\tnoun\n"
      << "the\tthe\tdeterminer\n"
      << "trade\ttrade\tnoun\n"
      << "vanished\tvanish\tverb\n"
      << "voter\tvoter\tnoun\n"
      << "voters\tvoter\tnoun\n"
      << "was\tbe\tverb\n"
      << "year\tyear\tnoun\n";
  for (const std::string& n : kEnglishNoiseNouns) out << n << '\t' << n << "\tnoun\n";
  return out.str();
}

std::string tgt_lexicon() {
  std::ostringstream out;
  out << "# surface<TAB>lemma<TAB>pos\n"
      << "apareció\taparecer\tverb\n"
      << "arte\tarte\tnoun\n"
      << "año\taño\tnoun\n"
      << "comercio\tcomercio\tnoun\n"
      << "conocido\tconocido\tnoun\n"
      << "cámara\tcámara\tnoun\n"
      << "de\tde\tpreposition\n"
      << "del\tde\tpreposition\n"
      << "edad\tedad\tnoun\n"
      << "el\tel\tdeterminer\n"
      << "estudio\testudio\tnoun\n"
      << "estudios\testudio\tnoun\n"
      << "habló\thablar\tverb\n"
      << "la\tla\tdeterminer\n"
      << "las\tla\tdeterminer\n"
      << "libre\tlibre\tadjective\n"
      << "llegó\tllegar\tverb\n"
      << "los\tel\tdeterminer\n"
      << "mina\tmina\tnoun\n"
      << "minas\tmina\tnoun\n"
      << "número\tnúmero\tnoun\n"
      << "pasó\tpasar\tverb\n"
      << "responsable\tresponsable\tnoun\n"
      << "sigue\tseguir\tverb\n"
      << "siguen\tseguir\tverb\n"
      << "subió\tsubir\tverb\n"
      << "tenía\ttener\tverb\n"
      << "tiene\ttener\tverb\n"
      << "tratado\ttratado\tnoun\n"
      << "un\tun\tdeterminer\n"
      << "una\tun\tdeterminer\n"
      << "votante\tvotante\tnoun\n"
      << "votantes\tvotante\tnoun\n"
      << "y\ty\tconjunction\n";
  for (const std::string& n : kSpanishNoiseNouns) out << n << '\t' << n << "\tnoun\n";
  return out.str();
}

std::string dictionary() {
  return "agreement\ttratado\n"
         "art\tarte\n"
         "family\tcámara\n"
         "family\tfamilia\n"
         "free\tlibre\n"
         "friend\tamigo\n"
         "friend\tconocido\n"
         "head\tcabeza\n"
         "head\tresponsable\n"
         "mine\tmina\n"
         "number\tnúmero\n"
         "old\tedad\n"
         "study\testudio\n"
         "trade\tcomercio\n"
         "voter\tvotante\n"
         "year\taño\n";
}

// English inventory; line order fixes the sense numbers per lemma.
std::string src_inventory() {
  return "head%1:18:00::\thead,chief,top_dog\n"
         "head%1:09:00::\thead,mind,brain\n"
         "head%1:06:00::\thead\n"
         "head%1:08:00::\thead,caput\n"
         "culprit%1:18:00::\tculprit,perpetrator\n"
         "chamber%1:06:00::\tchamber\n"
         "family%1:14:00::\tfamily,household\n"
         "family%1:18:00::\tfamily,folk\n"
         "year%1:28:00::\tyear,twelvemonth\n"
         "year%1:28:01::\tyear\n"
         "year%1:28:02::\tyear\n"
         "year%1:28:03::\tyear\n"
         "friend%1:18:00::\tfriend,comrade\n"
         "friend%1:18:02::\tfriend,acquaintance\n"
         "friend%1:18:03::\tfriend,supporter\n"
         "mine%1:06:00::\tmine\n"
         "mine%1:17:00::\tmine,excavation\n"
         "art%1:04:00::\tart,fine_art\n"
         "art%1:06:00::\tart,artwork\n"
         "art%1:09:00::\tart,artistry\n"
         "art%1:10:00::\tart\n"
         "study%1:04:00::\tstudy,work\n"
         "study%1:06:00::\tstudy\n"
         "number%1:10:00::\tnumber,issue\n"
         "number%1:23:00::\tnumber,figure\n"
         "number%1:09:00::\tnumber\n"
         "number%1:07:00::\tnumber,routine\n"
         "number%1:04:00::\tnumber,turn\n"
         "number%1:06:00::\tnumber\n"
         "number%1:14:00::\tnumber,phone_number\n"
         "number%1:28:00::\tnumber\n"
         "number%1:10:01::\tnumber,act\n"
         "number%1:18:00::\tnumber\n"
         "number%1:23:01::\tnumber,numeral\n"
         "voter%1:18:00::\tvoter,elector\n"
         "trade%1:04:00::\ttrade,commerce\n"
         "agreement%1:10:00::\tagreement,treaty\n"
         "free%3:00:00::\tfree\n"
         "pass%2:38:00::\tpass\n";
}

std::string tgt_inventory() {
  return "responsable%1:18:01::\tautor,culpable,perpetrador,responsable\n"
         "responsable%1:18:00::\tresponsable\n"
         "camara%1:06:00::\tcámara\n"
         "anyo%1:28:00::\taño\n"
         "anyo%1:28:01::\taño\n"
         "edad%1:28:00::\tedad\n"
         "edad%1:28:01::\tedad\n"
         "conocido%1:18:00::\tconocido\n"
         "mina%1:06:00::\tmina\n"
         "mina%1:17:00::\tmina\n"
         "arte%1:04:00::\tarte\n"
         "arte%1:06:00::\tarte\n"
         "arte%1:09:00::\tarte\n"
         "arte%1:10:00::\tarte\n"
         "estudio%1:04:00::\testudio\n"
         "estudio%1:06:00::\testudio\n"
         "numero%1:23:00::\tnúmero\n"
         "numero%1:10:00::\tnúmero\n"
         "numero%1:09:00::\tnúmero\n"
         "numero%1:07:00::\tnúmero\n"
         "numero%1:04:00::\tnúmero\n"
         "numero%1:06:00::\tnúmero\n"
         "numero%1:14:00::\tnúmero\n"
         "numero%1:28:00::\tnúmero\n"
         "votante%1:18:00::\tvotante\n"
         "tratado%1:10:00::\ttratado\n"
         "libre%3:00:00::\tlibre\n"
         "comercio%1:04:00::\tcomercio\n";
}

// The chain hops are target synset -> 1.5 id -> 1.6 id -> final id. The
// 1.5 -> 1.6 hop deliberately drops art%1:09:00:: so that sense of art
// disappears on the way.
const std::vector<std::pair<std::string, std::string>> kIliPairs = {
    {"responsable%1:18:01::", "culprit%1:18:00::"},
    {"responsable%1:18:00::", "head%1:18:00::"},
    {"camara%1:06:00::", "chamber%1:06:00::"},
    {"anyo%1:28:00::", "year%1:28:00::"},
    {"anyo%1:28:01::", "year%1:28:01::"},
    {"edad%1:28:00::", "year%1:28:02::"},
    {"edad%1:28:01::", "year%1:28:03::"},
    {"conocido%1:18:00::", "friend%1:18:02::"},
    {"mina%1:06:00::", "mine%1:06:00::"},
    {"mina%1:17:00::", "mine%1:17:00::"},
    {"arte%1:04:00::", "art%1:04:00::"},
    {"arte%1:06:00::", "art%1:06:00::"},
    {"arte%1:09:00::", "art%1:09:00::"},
    {"arte%1:10:00::", "art%1:10:00::"},
    {"estudio%1:04:00::", "study%1:04:00::"},
    {"estudio%1:06:00::", "study%1:06:00::"},
    {"numero%1:23:00::", "number%1:23:00::"},
    {"numero%1:10:00::", "number%1:10:00::"},
    {"numero%1:09:00::", "number%1:09:00::"},
    {"numero%1:07:00::", "number%1:07:00::"},
    {"numero%1:04:00::", "number%1:04:00::"},
    {"numero%1:06:00::", "number%1:06:00::"},
    {"numero%1:14:00::", "number%1:14:00::"},
    {"numero%1:28:00::", "number%1:28:00::"},
    {"votante%1:18:00::", "voter%1:18:00::"},
    {"tratado%1:10:00::", "agreement%1:10:00::"},
    {"libre%3:00:00::", "free%3:00:00::"},
    {"comercio%1:04:00::", "trade%1:04:00::"},
};

std::string ili_tsv() {
  std::ostringstream out;
  for (const auto& [from, to] : kIliPairs) out << from << '\t' << to << "@15\n";
  return out.str();
}

std::string wn15_16_tsv() {
  std::ostringstream out;
  for (const auto& [from, to] : kIliPairs) {
    (void)from;
    if (to == "art%1:09:00::") continue;  // the missing hop
    out << to << "@15\t" << to << "@16\n";
  }
  return out.str();
}

std::string wn16_17_tsv() {
  std::ostringstream out;
  for (const auto& [from, to] : kIliPairs) {
    (void)from;
    if (to == "art%1:09:00::") continue;
    out << to << "@16\t" << to << '\n';
  }
  return out.str();
}

struct WordSpec {
  std::string surface;
  std::string cmd;
  std::string pos;
  std::string lemma;  // empty: no lemma attribute
  std::string wnsn;   // empty: no gold sense
  std::string lexsn;
};

XmlElement word_element(const WordSpec& w) {
  XmlElement e;
  e.name = "wf";
  e.attrs["cmd"] = w.cmd;
  e.attrs["pos"] = w.pos;
  if (!w.lemma.empty()) e.attrs["lemma"] = w.lemma;
  if (!w.wnsn.empty()) e.attrs["wnsn"] = w.wnsn;
  if (!w.lexsn.empty()) e.attrs["lexsn"] = w.lexsn;
  e.children.push_back(XmlText{w.surface});
  return e;
}

WordSpec ignore(const std::string& surface, const std::string& pos) {
  return WordSpec{surface, "ignore", pos, "", "", ""};
}

WordSpec done(const std::string& surface, const std::string& pos,
              const std::string& lemma, const std::string& wnsn,
              const std::string& lexsn) {
  return WordSpec{surface, "done", pos, lemma, wnsn, lexsn};
}

XmlElement sentence_element(int snum, const std::vector<WordSpec>& words) {
  XmlElement s;
  s.name = "s";
  s.attrs["snum"] = std::to_string(snum);
  for (const WordSpec& w : words) {
    s.children.push_back(XmlText{"\n"});
    s.children.push_back(word_element(w));
  }
  XmlElement punc;
  punc.name = "punc";
  punc.children.push_back(XmlText{"."});
  s.children.push_back(XmlText{"\n"});
  s.children.push_back(punc);
  s.children.push_back(XmlText{"\n"});
  return s;
}

std::string eval_corpus(std::mt19937& rng, int noise_sentences) {
  const std::vector<std::string> noise_verbs = {"gleamed", "faded", "lingered"};
  std::vector<std::vector<WordSpec>> sentences;

  for (int i = 0; i < 3; ++i)
    sentences.push_back({ignore("The", "DT"),
                         done("head", "NN", "head", "1", "1:18:00::"),
                         ignore("of", "IN"), ignore("the", "DT"),
                         done("family", "NN", "family", "1", "1:14:00::"),
                         done("spoke", "VBD", "speak", "1", "2:32:00::")});
  for (int i = 0; i < 4; ++i)
    sentences.push_back({ignore("It", "PRP"), ignore("is", "VBZ"),
                         ignore("a", "DT"),
                         done("year", "NN", "year", "1", "1:28:00::"),
                         done("old", "JJ", "old", "1", "3:00:01::")});
  sentences.push_back({ignore("A", "DT"),
                       done("friend", "NN", "friend", "1", "1:18:00::"),
                       ignore("of", "IN"), ignore("mine", "PRP"),
                       done("stayed", "VBD", "stay", "1", "2:42:01::")});
  sentences.push_back({ignore("The", "DT"),
                       done("art", "NN", "art", "1", "1:04:00::"),
                       done("studies", "NNS", "study", "1", "1:04:00::"),
                       done("continue", "VBP", "continue", "1", "2:42:00::")});
  // the gold sense of this occurrence is the one the mapping chain loses
  sentences.push_back({ignore("The", "DT"),
                       done("art", "NN", "art", "3", "1:09:00::"),
                       done("studies", "NNS", "study", "1", "1:04:00::"),
                       done("continue", "VBP", "continue", "1", "2:42:00::")});
  for (int i = 0; i < 2; ++i)
    sentences.push_back({ignore("A", "DT"),
                         done("number", "NN", "number", "2", "1:23:00::"),
                         ignore("of", "IN"),
                         done("voters", "NNS", "voter", "1", "1:18:00::"),
                         done("agreed", "VBD", "agree", "1", "2:32:00::")});
  sentences.push_back({ignore("The", "DT"),
                       done("free", "JJ", "free", "1", "3:00:00::"),
                       done("trade", "NN", "trade", "1", "1:04:00::"),
                       done("agreement", "NN", "agreement", "1", "1:10:00::"),
                       done("passed", "VBD", "pass", "1", "2:38:00::")});
  for (int i = 0; i < noise_sentences; ++i) {
    const std::string noun = kEnglishNoiseNouns[pick(rng, kEnglishNoiseNouns.size())];
    const std::string verb = noise_verbs[pick(rng, noise_verbs.size())];
    sentences.push_back({ignore("The", "DT"),
                         done(noun, "NN", noun, "1", "1:03:00::"),
                         ignore(verb, "VBD")});
  }

  XmlElement p;
  p.name = "p";
  p.attrs["pnum"] = "1";
  int snum = 0;
  for (const auto& words : sentences) {
    p.children.push_back(XmlText{"\n"});
    p.children.push_back(sentence_element(++snum, words));
  }
  p.children.push_back(XmlText{"\n"});

  XmlElement context;
  context.name = "context";
  context.attrs["filename"] = "br-fix";
  context.attrs["paras"] = "yes";
  context.children.push_back(XmlText{"\n"});
  context.children.push_back(std::move(p));
  context.children.push_back(XmlText{"\n"});

  XmlDocument doc;
  doc.has_declaration = true;
  doc.root.name = "contextfile";
  doc.root.attrs["concordance"] = "fixture";
  doc.root.children.push_back(XmlText{"\n"});
  doc.root.children.push_back(std::move(context));
  doc.root.children.push_back(XmlText{"\n"});
  return serialize(doc);
}

std::string pipeline_config(const FixtureParams& params) {
  std::ostringstream out;
  out << "# generated fixture configuration\n"
      << "src-corpus = src_corpus.txt\n"
      << "tgt-corpus = tgt_corpus.txt\n"
      << "eval-corpus = eval_corpus.xml\n"
      << "src-lexicon = src_lexicon.tsv\n"
      << "tgt-lexicon = tgt_lexicon.tsv\n"
      << "dictionary = dictionary.tsv\n"
      << "src-inventory = src_inventory.tsv\n"
      << "tgt-inventory = tgt_inventory.tsv\n"
      << "map = ili.tsv,wn15_16.tsv,wn16_17.tsv\n"
      << "threshold = 2\n"
      << "out-dir = artifacts\n"
      << "seed = " << params.seed << "\n";
  return out.str();
}

}  // namespace

void generate_fixture(const std::string& dir, const FixtureParams& params) {
  if (params.noise_sentences < 0 || params.eval_noise_sentences < 0)
    throw DataError("fixture sentence counts must be non-negative");
  std::filesystem::create_directories(dir);
  std::mt19937 rng(params.seed);
  const std::filesystem::path base(dir);

  write_file((base / "src_corpus.txt").string(), src_corpus(rng, params.noise_sentences));
  write_file((base / "tgt_corpus.txt").string(), tgt_corpus(rng, params.noise_sentences));
  write_file((base / "src_lexicon.tsv").string(), src_lexicon());
  write_file((base / "tgt_lexicon.tsv").string(), tgt_lexicon());
  write_file((base / "dictionary.tsv").string(), dictionary());
  write_file((base / "src_inventory.tsv").string(), src_inventory());
  write_file((base / "tgt_inventory.tsv").string(), tgt_inventory());
  write_file((base / "ili.tsv").string(), ili_tsv());
  write_file((base / "wn15_16.tsv").string(), wn15_16_tsv());
  write_file((base / "wn16_17.tsv").string(), wn16_17_tsv());
  write_file((base / "eval_corpus.xml").string(),
             eval_corpus(rng, params.eval_noise_sentences));
  write_file((base / "pipeline.config").string(), pipeline_config(params));
}

}  // namespace npwsd
