// Regenerates tests/golden from the brute-force oracles. The committed
// goldens pin down the fixture pipeline: phrase selection, alignment,
// annotation and scoring all come from the reference implementations in
// oracles.cpp, while the canonical writers shared with the library fix the
// bytes. Usage: golden_gen <work_dir> <golden_dir>

#include <filesystem>
#include <iostream>
#include <set>

#include "npwsd/annotator.hpp"
#include "npwsd/fixture.hpp"
#include "npwsd/pipeline.hpp"
#include "npwsd/util.hpp"
#include "oracles.hpp"

using namespace npwsd;
namespace fs = std::filesystem;

namespace {

PhraseCounts oracle_chunk(const Document& doc) {
  PhraseCounts counts;
  for (const Sentence& sentence : doc.sentences)
    for (const Phrase& p : oracles::brute_noun_phrases(sentence)) {
      auto [it, inserted] = counts.try_emplace(p.key, PhraseEntry{p.open_class_lemmas, 0});
      (void)inserted;
      it->second.count += 1;
    }
  return counts;
}

// The annotation contract, restated over the XML words with the oracle
// matcher and oracle filter.
void oracle_annotate(ParsedCorpus& corpus, const std::vector<std::string>& keys,
                     const AlignmentTable& table, const SenseInventory& tgt_inv,
                     const MappingChain& chain, const SenseInventory& src_inv,
                     const Lexicon& lexicon) {
  for (CorpusSentence& sentence : corpus.sentences) {
    std::vector<Token> tokens;
    for (const AnnotatedWord& w : sentence.words) {
      std::string lemma = w.lemma;
      if (w.element->attrs.count("lemma") == 0 && !w.surface.empty())
        lemma = analyze(w.surface, lexicon).lemma;
      tokens.push_back(Token{w.surface.empty() ? "?" : w.surface,
                             lemma.empty() ? "?" : lemma,
                             pos_from_corpus_tag(w.pos)});
    }
    for (const Match& m : oracles::brute_match(tokens, keys)) {
      const std::vector<Alignment>* alignments = table.find(m.phrase_key);
      for (std::size_t i = m.start; i < m.end; ++i) {
        AnnotatedWord& w = sentence.words[i];
        w.element->attrs["phrase"] = m.phrase_key;
        if (!is_open_class(pos_from_corpus_tag(w.pos))) continue;
        if (tokens[i].lemma == "?" || alignments == nullptr) continue;
        const FilterResult fr = oracles::brute_filter(
            tokens[i].lemma, m.phrase_key, table, tgt_inv, chain, src_inv, 1);
        std::vector<long> freqs;
        for (const Alignment& a : *alignments) freqs.push_back(a.frequency);
        w.element->attrs["alignments"] = encode_alignments(fr.support);
        w.element->attrs["alignment_freqs"] = encode_freqs(freqs);
      }
    }
  }
}

std::vector<long> collect_thresholds(const XmlElement& element, std::set<long>* out) {
  auto it = element.attrs.find("alignment_freqs");
  if (it != element.attrs.end())
    for (const std::string& f : split_ws(it->second)) out->insert(std::stol(f));
  for (const XmlNode& child : element.children)
    if (const auto* e = std::get_if<XmlElement>(&child)) collect_thresholds(*e, out);
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: golden_gen <work_dir> <golden_dir>\n";
    return 1;
  }
  const fs::path work(argv[1]);
  const fs::path golden(argv[2]);
  fs::create_directories(golden);

  generate_fixture(work.string(), FixtureParams{});

  const Lexicon src_lex = load_lexicon((work / "src_lexicon.tsv").string());
  const Lexicon tgt_lex = load_lexicon((work / "tgt_lexicon.tsv").string());
  const Document src_doc =
      analyze_text(read_file((work / "src_corpus.txt").string()), "src_corpus", src_lex);
  const Document tgt_doc =
      analyze_text(read_file((work / "tgt_corpus.txt").string()), "tgt_corpus", tgt_lex);

  const PhraseCounts src_counts = oracle_chunk(src_doc);
  const PhraseCounts tgt_counts = oracle_chunk(tgt_doc);
  write_file((golden / kSrcPhrasesFile).string(), phrase_counts_tsv("src_corpus", src_counts));
  write_file((golden / kTgtPhrasesFile).string(), phrase_counts_tsv("tgt_corpus", tgt_counts));

  const BilingualDictionary dict = load_dictionary((work / "dictionary.tsv").string());
  const AlignmentTable table = oracles::brute_align(src_counts, tgt_counts, dict);
  write_file((golden / kAlignmentsFile).string(), alignment_table_tsv(table));

  const SenseInventory src_inv = load_inventory((work / "src_inventory.tsv").string(), "source");
  const SenseInventory tgt_inv = load_inventory((work / "tgt_inventory.tsv").string(), "target");
  MappingChain chain;
  for (const char* name : {"ili.tsv", "wn15_16.tsv", "wn16_17.tsv"})
    chain.push_back(load_mapping((work / name).string()));

  std::vector<std::string> keys;
  for (const auto& [key, alignments] : table.entries) {
    (void)alignments;
    keys.push_back(key);
  }
  ParsedCorpus corpus = load_corpus((work / "eval_corpus.xml").string());
  oracle_annotate(corpus, keys, table, tgt_inv, chain, src_inv, src_lex);
  write_file((golden / kAnnotatedFile).string(), serialize(corpus.doc));

  // config threshold in the bundled fixture is 2
  write_file((golden / kReportFile).string(),
             report_text(oracles::brute_evaluate(corpus.doc, 2)));

  std::set<long> thresholds{0};
  collect_thresholds(corpus.doc.root, &thresholds);
  std::vector<SweepRow> rows;
  for (long t : thresholds) {
    const EvalReport r = oracles::brute_evaluate(corpus.doc, t);
    rows.push_back(SweepRow{t, r.covered_words, r.retained_words, r.coverage(),
                            r.potential_precision()});
  }
  write_file((golden / kSweepFile).string(), sweep_tsv(rows));

  std::cout << "golden files written to " << golden.string() << "\n";
  return 0;
}
