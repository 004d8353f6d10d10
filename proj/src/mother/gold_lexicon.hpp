#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "avm/feature_structure.hpp"

namespace lexlab::mother {

// Gold word class. The daughter never sees this; it exists for the mother's
// grammar and for evaluation.
enum class WordClass { kFunction, kContent };

// Syntactic categories of the fragment grammar. Closed-class adverbs (niet,
// er, hier, ...) and open-class adverbs are separate categories because they
// belong to different word classes.
enum class Category {
  kDet,
  kQuant,
  kNum,
  kNoun,
  kVerb,
  kAux,
  kAdj,
  kPrep,
  kComp,
  kPron,
  kConj,
  kAdvClosed,
  kAdvOpen,
};

const char* category_atom(Category c);
std::optional<Category> category_from_atom(std::string_view atom);
bool is_closed_category(Category c);
WordClass class_for_category(Category c);
const char* word_class_name(WordClass c);

// A complement slot: the category the filler must have plus feature
// constraints the filler's features must unify with. Constraint variables
// may be shared with the template's own features (that is how agreement is
// threaded through a template).
struct ArgSlot {
  Category category;
  avm::FeatureStructure features;
};

// One lexical item of the mother grammar.
struct GoldTemplate {
  std::string phonform;
  Category category;
  WordClass gold_class;
  avm::FeatureStructure features;
  std::vector<ArgSlot> arg_slots;

  std::string id() const { return std::string(category_atom(category)) + "/" + phonform; }
};

// The mother's full inventory. Phonforms are unique across the lexicon so
// every corpus token resolves to exactly one template.
class GoldLexicon {
 public:
  void add(GoldTemplate tpl);  // kValidation on duplicate phonform

  const std::vector<GoldTemplate>& templates() const { return templates_; }
  const GoldTemplate* find(std::string_view phonform) const;

  std::vector<const GoldTemplate*> pool(Category c) const;

  std::size_t closed_class_size() const;
  std::size_t open_class_size() const;

  // Scale requirements for acquisition experiments: open class at least 40x
  // the closed class. Small hand-written lexicons stay loadable; the
  // experiment runner insists on this before running.
  void validate_experiment_scale() const;  // kValidation on violation

 private:
  std::vector<GoldTemplate> templates_;
  std::map<std::string, std::size_t, std::less<>> by_phonform_;
};

// Parses lexicon text: one bracketed entry per item with reserved top-level
// attributes PHON, CAT, CLASS and optional FEAT, ARG1..ARGn.
GoldLexicon load_gold_lexicon(std::string_view text);
GoldLexicon load_gold_lexicon_file(const std::string& path);

}  // namespace lexlab::mother
