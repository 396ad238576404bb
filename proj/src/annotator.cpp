#include "npwsd/annotator.hpp"

#include <iostream>

#include "npwsd/errors.hpp"
#include "npwsd/util.hpp"

namespace npwsd {

PosCategory pos_from_corpus_tag(const std::string& tag) {
  const std::string t = to_lower_ascii(tag);
  if (t.starts_with("nn")) return PosCategory::noun;
  if (t.starts_with("jj")) return PosCategory::adjective;
  if (t.starts_with("vb")) return PosCategory::verb;
  if (t == "in") return PosCategory::preposition;
  if (t == "dt") return PosCategory::determiner;
  if (t == "cc") return PosCategory::conjunction;
  return PosCategory::other;
}

namespace {

std::string element_text(const XmlElement& element) {
  std::string out;
  for (const XmlNode& child : element.children)
    if (const auto* text = std::get_if<XmlText>(&child)) out += text->text;
  return out;
}

std::string attr_or_empty(const XmlElement& element, const std::string& name) {
  auto it = element.attrs.find(name);
  return it == element.attrs.end() ? std::string() : it->second;
}

AnnotatedWord make_word(XmlElement& element, std::ostream& warn) {
  AnnotatedWord w;
  w.element = &element;
  w.is_punc = element.name == "punc";
  w.surface = trim(element_text(element));
  w.cmd = attr_or_empty(element, "cmd");
  w.pos = attr_or_empty(element, "pos");
  w.lexsn = attr_or_empty(element, "lexsn");
  w.lemma = attr_or_empty(element, "lemma");
  if (w.lemma.empty() && !w.surface.empty()) w.lemma = to_lower_ascii(w.surface);

  const std::string wnsn = attr_or_empty(element, "wnsn");
  if (!wnsn.empty()) {
    try {
      w.wnsn = parse_long(wnsn, "wnsn");
    } catch (const DataError&) {
      warn << "warning: unparseable wnsn \"" << wnsn << "\" on \"" << w.surface
           << "\", treating the word as non-amenable\n";
    }
  }

  if (!w.is_punc && w.cmd != "ignore" && attr_or_empty(element, "lemma").empty())
    warn << "warning: word \"" << w.surface
         << "\" has no lemma attribute, treating it as non-amenable\n";

  w.amenable = !w.is_punc && w.cmd == "done" &&
               pos_from_corpus_tag(w.pos) == PosCategory::noun &&
               !attr_or_empty(element, "lemma").empty() && w.wnsn.has_value();

  const std::string alignments = attr_or_empty(element, "alignments");
  if (element.attrs.count("alignments") > 0) w.alignments = decode_alignments(alignments);
  const std::string freqs = attr_or_empty(element, "alignment_freqs");
  if (element.attrs.count("alignment_freqs") > 0) w.alignment_freqs = decode_freqs(freqs);
  const std::string phrase = attr_or_empty(element, "phrase");
  if (element.attrs.count("phrase") > 0) w.phrase = phrase;
  return w;
}

void collect_sentences(XmlElement& element, const std::string& doc_id,
                       ParsedCorpus& corpus, std::ostream& warn) {
  if (element.name == "s") {
    CorpusSentence sentence;
    sentence.doc_id = doc_id;
    for (XmlNode& child : element.children)
      if (auto* e = std::get_if<XmlElement>(&child))
        if (e->name == "wf" || e->name == "punc")
          sentence.words.push_back(make_word(*e, warn));
    corpus.sentences.push_back(std::move(sentence));
    return;
  }
  std::string inherited = doc_id;
  if (element.name == "context") {
    auto it = element.attrs.find("filename");
    if (it != element.attrs.end()) inherited = it->second;
  }
  for (XmlNode& child : element.children)
    if (auto* e = std::get_if<XmlElement>(&child))
      collect_sentences(*e, inherited, corpus, warn);
}

}  // namespace

ParsedCorpus parse_corpus(XmlDocument doc, std::ostream* diag) {
  std::ostream& warn = diag ? *diag : std::cerr;
  ParsedCorpus corpus;
  corpus.doc = std::move(doc);
  collect_sentences(corpus.doc.root, "", corpus, warn);
  return corpus;
}

ParsedCorpus parse_corpus_text(const std::string& xml, const std::string& name,
                               std::ostream* diag) {
  return parse_corpus(parse_xml(xml, name), diag);
}

ParsedCorpus load_corpus(const std::string& path, std::ostream* diag) {
  return parse_corpus_text(read_file(path), path, diag);
}

std::string encode_alignments(const std::vector<SenseSupport>& support) {
  std::vector<std::string> parts;
  for (const SenseSupport& s : support)
    parts.push_back(s.sense_id + ":" + std::to_string(s.frequency));
  return join(parts, " ");
}

std::vector<SenseSupport> decode_alignments(const std::string& value) {
  std::vector<SenseSupport> out;
  for (const std::string& part : split_ws(value)) {
    const std::size_t cut = part.rfind(':');
    if (cut == std::string::npos || cut == 0 || cut + 1 >= part.size())
      throw DataError("malformed alignments entry \"" + part + "\"");
    out.push_back(SenseSupport{part.substr(0, cut),
                               parse_long(part.substr(cut + 1), "alignment frequency")});
  }
  return out;
}

std::string encode_freqs(const std::vector<long>& freqs) {
  std::vector<std::string> parts;
  for (long f : freqs) parts.push_back(std::to_string(f));
  return join(parts, " ");
}

std::vector<long> decode_freqs(const std::string& value) {
  std::vector<long> out;
  for (const std::string& part : split_ws(value))
    out.push_back(parse_long(part, "alignment frequency"));
  return out;
}

void annotate(ParsedCorpus& corpus, const PhraseForest& forest,
              const AlignmentTable& table, const SenseInventory& tgt_inv,
              const MappingChain& chain, const SenseInventory& src_inv,
              long threshold, const Lexicon& lexicon) {
  for (CorpusSentence& sentence : corpus.sentences) {
    std::vector<Token> tokens;
    tokens.reserve(sentence.words.size());
    for (const AnnotatedWord& w : sentence.words) {
      std::string lemma = w.lemma;
      const bool has_lemma_attr =
          w.element != nullptr && w.element->attrs.count("lemma") > 0;
      if (!has_lemma_attr && !w.surface.empty())
        lemma = analyze(w.surface, lexicon).lemma;
      tokens.push_back(Token{w.surface.empty() ? "?" : w.surface,
                             lemma.empty() ? "?" : lemma,
                             pos_from_corpus_tag(w.pos)});
    }
    for (const Match& m : match_text(tokens, forest)) {
      const std::vector<Alignment>* alignments = table.find(m.phrase_key);
      for (std::size_t i = m.start; i < m.end; ++i) {
        AnnotatedWord& w = sentence.words[i];
        w.phrase = m.phrase_key;
        w.element->attrs["phrase"] = m.phrase_key;
        if (!is_open_class(pos_from_corpus_tag(w.pos))) continue;
        if (tokens[i].lemma == "?" || alignments == nullptr || alignments->empty())
          continue;
        const FilterResult fr = filter_senses(tokens[i].lemma, m.phrase_key, table,
                                              tgt_inv, chain, src_inv, threshold);
        w.alignments = fr.support;
        w.alignment_freqs.clear();
        for (const Alignment& a : *alignments) w.alignment_freqs.push_back(a.frequency);
        w.element->attrs["alignments"] = encode_alignments(w.alignments);
        w.element->attrs["alignment_freqs"] = encode_freqs(w.alignment_freqs);
      }
    }
  }
}

void validate_annotations(const ParsedCorpus& corpus) {
  for (const CorpusSentence& sentence : corpus.sentences)
    for (const AnnotatedWord& w : sentence.words) {
      if (!w.alignments.empty() && !w.phrase)
        throw DataError("word \"" + w.surface + "\" has alignments but no phrase");
      if (!w.alignment_freqs.empty() && !w.phrase)
        throw DataError("word \"" + w.surface + "\" has alignment_freqs but no phrase");
      for (const SenseSupport& s : w.alignments)
        if (s.frequency < 1)
          throw DataError("word \"" + w.surface + "\" has a non-positive support frequency");
    }
}

}  // namespace npwsd
