#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "common/rng.hpp"
#include "mother/gold_lexicon.hpp"

namespace lexlab::mother {

enum class PhraseKind { kNounPhrase, kSentence };

const char* phrase_kind_name(PhraseKind k);             // "np" / "sentence"
std::optional<PhraseKind> phrase_kind_from_name(std::string_view name);

struct Utterance {
  std::vector<std::string> tokens;
  PhraseKind kind = PhraseKind::kNounPhrase;
  std::vector<std::string> derivation;  // template ids, for logging only
};

// Executes the fragment grammar over a gold lexicon. Rule choices are
// uniform over the alternatives listed in the rule tables (an alternative
// listed twice is simply twice as likely); lexical slots sample uniformly
// from the applicable pool. Agreement is enforced by unification of the
// head's argument constraints with the dependent's features, so e.g. a
// plural-only determiner never surfaces next to a singular noun.
class MotherAgent {
 public:
  explicit MotherAgent(const GoldLexicon& lexicon);

  // Deterministic for a given rng state. Throws kGenerationExhausted when no
  // derivation is found within the retry budget (inconsistent lexicon).
  Utterance generate_exemplar(PhraseKind kind, Rng& rng) const;

  // n independent exemplars; exemplar i draws from a sub-stream derived from
  // (seed, i), so the corpus is reproducible and order-independent.
  std::vector<Utterance> generate_corpus(PhraseKind kind, std::uint64_t n,
                                         std::uint64_t seed) const;

  // Feedback on a daughter utterance. The interaction loop for these
  // experiments runs without grammaticality feedback, so this accepts
  // everything.
  bool feedback(const Utterance&) const { return true; }

  const GoldLexicon& lexicon() const { return lexicon_; }

 private:
  struct Pools;
  const GoldTemplate* applicable_det(const GoldTemplate& noun, Rng& rng) const;

  const GoldLexicon& lexicon_;
  // Immutable after construction; safe to share across generation streams.
  std::vector<const GoldTemplate*> det_like_;
  std::vector<const GoldTemplate*> nouns_;
  std::vector<const GoldTemplate*> adjs_;
  std::vector<const GoldTemplate*> open_advs_;
  std::vector<const GoldTemplate*> verbs_fin_sg_;
  std::vector<const GoldTemplate*> verbs_base_;
  std::vector<const GoldTemplate*> verbs_part_;
  std::vector<const GoldTemplate*> preps_;
  std::vector<const GoldTemplate*> subject_prons_;
  std::vector<const GoldTemplate*> aux_sg_;
  std::vector<const GoldTemplate*> aux_pl_;
  std::vector<const GoldTemplate*> rel_prons_;
  std::vector<const GoldTemplate*> neg_;
  std::vector<const GoldTemplate*> expl_;
  std::vector<const GoldTemplate*> loc_advs_;
  std::vector<const GoldTemplate*> wh_advs_;
  std::vector<const GoldTemplate*> comp_inf_;
  std::vector<const GoldTemplate*> comp_for_;
  std::vector<const GoldTemplate*> comp_fin_;
  std::vector<const GoldTemplate*> conjs_;
  // noun feature spelling -> determiners that unify with it
  std::map<std::string, std::vector<const GoldTemplate*>> dets_by_noun_features_;
};

inline constexpr char kRuleChoicePolicy[] = "uniform-over-listed-alternatives";

// Corpus file format: '#' header comment recording kind, n and seed, then
// one utterance per line, tokens separated by single spaces, UTF-8, LF.
void write_corpus(std::ostream& out, const std::vector<Utterance>& corpus,
                  PhraseKind kind, std::uint64_t n, std::uint64_t seed);

std::vector<std::vector<std::string>> read_corpus(std::istream& in);
std::vector<std::vector<std::string>> read_corpus_file(const std::string& path);

}  // namespace lexlab::mother
