#include "mother/gold_lexicon.hpp"

#include <fstream>
#include <sstream>

#include "avm/avm_text.hpp"
#include "common/error.hpp"

namespace lexlab::mother {

namespace {

struct CategoryInfo {
  Category category;
  const char* atom;
  WordClass word_class;
};

// Function words are the closed classes: determiners, quantifiers, numerals,
// prepositions, complementizers, pronouns, conjunctions, auxiliaries and
// closed-class adverbs. Content words are the open classes.
constexpr CategoryInfo kCategories[] = {
    {Category::kDet, "det", WordClass::kFunction},
    {Category::kQuant, "quant", WordClass::kFunction},
    {Category::kNum, "num", WordClass::kFunction},
    {Category::kNoun, "n", WordClass::kContent},
    {Category::kVerb, "v", WordClass::kContent},
    {Category::kAux, "aux", WordClass::kFunction},
    {Category::kAdj, "adj", WordClass::kContent},
    {Category::kPrep, "prep", WordClass::kFunction},
    {Category::kComp, "comp", WordClass::kFunction},
    {Category::kPron, "pron", WordClass::kFunction},
    {Category::kConj, "conj", WordClass::kFunction},
    {Category::kAdvClosed, "advc", WordClass::kFunction},
    {Category::kAdvOpen, "advo", WordClass::kContent},
};

const CategoryInfo& info_for(Category c) {
  for (const auto& info : kCategories) {
    if (info.category == c) return info;
  }
  fail(ErrorCode::kInvalidArgument, "unknown category");
}

}  // namespace

const char* category_atom(Category c) { return info_for(c).atom; }

std::optional<Category> category_from_atom(std::string_view atom) {
  for (const auto& info : kCategories) {
    if (atom == info.atom) return info.category;
  }
  return std::nullopt;
}

bool is_closed_category(Category c) {
  return info_for(c).word_class == WordClass::kFunction;
}

WordClass class_for_category(Category c) { return info_for(c).word_class; }

const char* word_class_name(WordClass c) {
  return c == WordClass::kFunction ? "function" : "content";
}

void GoldLexicon::add(GoldTemplate tpl) {
  if (tpl.phonform.empty()) {
    fail(ErrorCode::kValidation, "template with empty phonform");
  }
  auto [it, inserted] = by_phonform_.emplace(tpl.phonform, templates_.size());
  if (!inserted) {
    const GoldTemplate& prev = templates_[it->second];
    std::ostringstream os;
    os << "duplicate lexicon entry for '" << tpl.phonform << "' (" << prev.id()
       << " vs " << tpl.id() << ")";
    fail(ErrorCode::kValidation, os.str());
  }
  templates_.push_back(std::move(tpl));
}

const GoldTemplate* GoldLexicon::find(std::string_view phonform) const {
  auto it = by_phonform_.find(phonform);
  return it == by_phonform_.end() ? nullptr : &templates_[it->second];
}

std::vector<const GoldTemplate*> GoldLexicon::pool(Category c) const {
  std::vector<const GoldTemplate*> out;
  for (const auto& tpl : templates_) {
    if (tpl.category == c) out.push_back(&tpl);
  }
  return out;
}

std::size_t GoldLexicon::closed_class_size() const {
  std::size_t n = 0;
  for (const auto& tpl : templates_) {
    if (tpl.gold_class == WordClass::kFunction) ++n;
  }
  return n;
}

std::size_t GoldLexicon::open_class_size() const {
  return templates_.size() - closed_class_size();
}

void GoldLexicon::validate_experiment_scale() const {
  std::size_t closed = closed_class_size();
  std::size_t open = open_class_size();
  if (closed == 0 || open < 40 * closed) {
    std::ostringstream os;
    os << "lexicon too small for acquisition experiments: " << closed
       << " closed-class and " << open
       << " open-class items (need open >= 40 x closed); size-ratio violation";
    fail(ErrorCode::kValidation, os.str());
  }
}

namespace {

const avm::FeatureStructure kEmptyFeatures;

GoldTemplate template_from_entry(const avm::ParsedEntry& entry) {
  GoldTemplate tpl;
  const avm::FeatureStructure& fs = entry.fs;

  auto required_atom = [&](const char* name) -> std::string {
    const avm::FeatureValue* v = fs.find(name);
    if (v == nullptr || !v->is_atom()) {
      std::ostringstream os;
      os << "entry at line " << entry.line << " needs atom attribute " << name;
      fail(ErrorCode::kValidation, os.str());
    }
    return v->atom_text();
  };

  tpl.phonform = required_atom("PHON");

  std::string cat = required_atom("CAT");
  auto category = category_from_atom(cat);
  if (!category) {
    std::ostringstream os;
    os << "entry at line " << entry.line << ": unknown category '" << cat << "'";
    fail(ErrorCode::kValidation, os.str());
  }
  tpl.category = *category;

  std::string cls = required_atom("CLASS");
  WordClass declared;
  if (cls == "function") {
    declared = WordClass::kFunction;
  } else if (cls == "content") {
    declared = WordClass::kContent;
  } else {
    std::ostringstream os;
    os << "entry at line " << entry.line << ": CLASS must be function or content";
    fail(ErrorCode::kValidation, os.str());
  }
  if (declared != class_for_category(tpl.category)) {
    std::ostringstream os;
    os << "entry at line " << entry.line << " ('" << tpl.phonform
       << "'): CLASS " << cls << " contradicts category " << cat;
    fail(ErrorCode::kValidation, os.str());
  }
  tpl.gold_class = declared;

  if (const avm::FeatureValue* feat = fs.find("FEAT")) {
    if (!feat->is_structure()) {
      std::ostringstream os;
      os << "entry at line " << entry.line << ": FEAT must be a structure";
      fail(ErrorCode::kValidation, os.str());
    }
    tpl.features = feat->structure();
  }

  for (int i = 1;; ++i) {
    std::string name = "ARG" + std::to_string(i);
    const avm::FeatureValue* arg = fs.find(name);
    if (arg == nullptr) break;
    if (!arg->is_structure()) {
      std::ostringstream os;
      os << "entry at line " << entry.line << ": " << name << " must be a structure";
      fail(ErrorCode::kValidation, os.str());
    }
    const avm::FeatureStructure& slot_fs = arg->structure();
    const avm::FeatureValue* slot_cat = slot_fs.find("CAT");
    if (slot_cat == nullptr || !slot_cat->is_atom()) {
      std::ostringstream os;
      os << "entry at line " << entry.line << ": " << name << " needs atom CAT";
      fail(ErrorCode::kValidation, os.str());
    }
    auto slot_category = category_from_atom(slot_cat->atom_text());
    if (!slot_category) {
      std::ostringstream os;
      os << "entry at line " << entry.line << ": " << name << " has unknown CAT '"
         << slot_cat->atom_text() << "'";
      fail(ErrorCode::kValidation, os.str());
    }
    ArgSlot slot;
    slot.category = *slot_category;
    if (const avm::FeatureValue* slot_feat = slot_fs.find("FEAT")) {
      if (!slot_feat->is_structure()) {
        std::ostringstream os;
        os << "entry at line " << entry.line << ": " << name << ".FEAT must be a structure";
        fail(ErrorCode::kValidation, os.str());
      }
      slot.features = slot_feat->structure();
    }
    tpl.arg_slots.push_back(std::move(slot));
  }

  // Anything other than the reserved attributes is a sign of a broken file.
  for (const auto& [name, value] : fs.attributes()) {
    (void)value;
    if (name == "PHON" || name == "CAT" || name == "CLASS" || name == "FEAT") continue;
    if (name.rfind("ARG", 0) == 0) continue;
    std::ostringstream os;
    os << "entry at line " << entry.line << ": unexpected attribute " << name;
    fail(ErrorCode::kValidation, os.str());
  }

  return tpl;
}

}  // namespace

GoldLexicon load_gold_lexicon(std::string_view text) {
  GoldLexicon lexicon;
  for (const avm::ParsedEntry& entry : avm::parse_structures(text)) {
    lexicon.add(template_from_entry(entry));
  }
  return lexicon;
}

GoldLexicon load_gold_lexicon_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open lexicon file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_gold_lexicon(buf.str());
}

}  // namespace lexlab::mother
