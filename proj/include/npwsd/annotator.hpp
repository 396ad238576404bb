#ifndef NPWSD_ANNOTATOR_HPP
#define NPWSD_ANNOTATOR_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "npwsd/matcher.hpp"
#include "npwsd/sense_filter.hpp"
#include "npwsd/xml.hpp"

namespace npwsd {

// One corpus word (a <wf> or <punc> element). Original attributes are kept
// on the element; the parsed view mirrors the ones the pipeline needs.
struct AnnotatedWord {
  std::string surface;
  std::string lemma;  // lemma attribute, or lowercased surface as fallback
  std::string pos;    // raw corpus tag, e.g. "NN"
  std::string cmd;
  std::optional<long> wnsn;
  std::string lexsn;
  bool is_punc = false;
  bool amenable = false;  // cmd="done", noun tag, lemma and wnsn present

  std::optional<std::string> phrase;
  std::vector<SenseSupport> alignments;   // senseid:frequency pairs
  std::vector<long> alignment_freqs;      // every alignment of the phrase

  XmlElement* element = nullptr;
};

struct CorpusSentence {
  std::string doc_id;  // filename attribute of the enclosing context, if any
  std::vector<AnnotatedWord> words;
};

struct ParsedCorpus {
  XmlDocument doc;
  std::vector<CorpusSentence> sentences;
};

// Maps corpus tags onto the coarse categories: NN* noun, JJ* adjective,
// VB* verb, IN preposition, DT determiner, CC conjunction, anything else
// other.
PosCategory pos_from_corpus_tag(const std::string& tag);

// Collects the <wf>/<punc> words under every <s> element. Words with
// cmd="ignore" are kept but never amenable; a non-ignored word without a
// lemma is warned about and treated as non-amenable.
ParsedCorpus parse_corpus(XmlDocument doc, std::ostream* diag = nullptr);
ParsedCorpus parse_corpus_text(const std::string& xml, const std::string& name,
                               std::ostream* diag = nullptr);
ParsedCorpus load_corpus(const std::string& path, std::ostream* diag = nullptr);

// encode/decode for the alignments attribute ("senseid:freq senseid:freq");
// sense ids may themselves contain colons, so the split is on the last one.
std::string encode_alignments(const std::vector<SenseSupport>& support);
std::vector<SenseSupport> decode_alignments(const std::string& value);
std::string encode_freqs(const std::vector<long>& freqs);
std::vector<long> decode_freqs(const std::string& value);

// Detects phrases over each sentence's lemma stream and enriches matched
// words in place: every word in a match gets phrase="key"; open-class words
// with a lemma also get alignments plus alignment_freqs when the phrase is
// in the table. The threshold feeds filter_senses; alignment_freqs always
// lists every alignment so evaluation can re-threshold later. Words
// without a lemma attribute are lemmatized through the lexicon (identity
// fallback), so inflected untagged words still reach the matcher.
void annotate(ParsedCorpus& corpus, const PhraseForest& forest,
              const AlignmentTable& table, const SenseInventory& tgt_inv,
              const MappingChain& chain, const SenseInventory& src_inv,
              long threshold, const Lexicon& lexicon = Lexicon{});

void validate_annotations(const ParsedCorpus& corpus);

}  // namespace npwsd

#endif
