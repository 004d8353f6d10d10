#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace lexlab::avm {

class FeatureStructure;

std::string to_upper_ascii(std::string_view s);
std::string to_lower_ascii(std::string_view s);

// One slot of an attribute-value matrix: an atomic constant, a variable, or a
// nested structure. Atoms are case-insensitive and stored lower-case;
// variable names keep their spelling. Values are immutable once built, so
// copies are cheap (nested structures are shared).
class FeatureValue {
 public:
  enum class Kind { kAtom, kVariable, kStructure };

  static FeatureValue atom(std::string_view text);
  static FeatureValue variable(std::string_view name);
  static FeatureValue structure(FeatureStructure fs);

  Kind kind() const;
  bool is_atom() const { return kind() == Kind::kAtom; }
  bool is_variable() const { return kind() == Kind::kVariable; }
  bool is_structure() const { return kind() == Kind::kStructure; }

  const std::string& atom_text() const;      // requires is_atom()
  const std::string& variable_name() const;  // requires is_variable()
  const FeatureStructure& structure() const; // requires is_structure()

  bool operator==(const FeatureValue& other) const;
  bool operator!=(const FeatureValue& other) const { return !(*this == other); }

 private:
  struct Atom {
    std::string text;
    bool operator==(const Atom&) const = default;
  };
  struct Variable {
    std::string name;
    bool operator==(const Variable&) const = default;
  };
  using Rep = std::variant<Atom, Variable, std::shared_ptr<const FeatureStructure>>;

  explicit FeatureValue(Rep rep) : rep_(std::move(rep)) {}
  Rep rep_;
};

// Attribute-value matrix. Attribute names are case-insensitive tokens stored
// upper-case; at most one value per name per level. Attributes are kept in
// sorted order, which fixes the traversal order used for conflict reporting
// and canonical variable renaming.
class FeatureStructure {
 public:
  using AttributeMap = std::map<std::string, FeatureValue>;

  FeatureStructure() = default;

  // Inserts or replaces; the name is folded to upper case.
  void set(std::string_view name, FeatureValue value);
  const FeatureValue* find(std::string_view name) const;

  bool empty() const { return attrs_.empty(); }
  std::size_t size() const { return attrs_.size(); }
  const AttributeMap& attributes() const { return attrs_; }

  bool operator==(const FeatureStructure& other) const;
  bool operator!=(const FeatureStructure& other) const { return !(*this == other); }

 private:
  AttributeMap attrs_;
};

// Substitution store mapping variable names to values. bind() enforces the
// occurs-check, so chains are acyclic and resolution terminates.
class Bindings {
 public:
  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }

  const FeatureValue* lookup(const std::string& var) const;
  void bind(std::string var, FeatureValue value);

  // Chases a variable through the store until it hits a non-variable or an
  // unbound variable.
  FeatureValue walk(FeatureValue value) const;

  // Full substitution to fixed point.
  FeatureValue resolve(const FeatureValue& value) const;
  FeatureStructure resolve(const FeatureStructure& fs) const;

  const std::map<std::string, FeatureValue>& raw() const { return map_; }

 private:
  std::map<std::string, FeatureValue> map_;
};

enum class UnifyError { kConflict, kOccursCheck };

// Merge of two structures. On success the result is specified for every
// attribute of both inputs, with the accumulated bindings applied. On
// failure the path names the first conflicting attribute under sorted
// traversal, and the bindings accumulated up to the failure are kept for
// diagnostics.
class UnifyResult {
 public:
  static UnifyResult success(FeatureStructure merged, Bindings bindings);
  static UnifyResult failure(UnifyError error, std::string path, Bindings bindings);

  bool ok() const { return merged_.has_value(); }
  explicit operator bool() const { return ok(); }

  const FeatureStructure& merged() const { return *merged_; }
  const Bindings& bindings() const { return bindings_; }
  UnifyError error() const { return *error_; }
  const std::string& conflict_path() const { return path_; }

 private:
  std::optional<FeatureStructure> merged_;
  Bindings bindings_;
  std::optional<UnifyError> error_;
  std::string path_;
};

// Callers are responsible for keeping the variable namespaces of `a` and `b`
// apart unless sharing is intended (template instantiation renames fresh).
UnifyResult unify(const FeatureStructure& a, const FeatureStructure& b);

// True iff some assignment of general's variables turns it into a sub-map of
// specific at every path. Variables on the specific side are treated as
// opaque constants.
bool subsumes(const FeatureStructure& general, const FeatureStructure& specific);

// Alpha-renames variables to V1, V2, ... in first-visit order under sorted
// traversal; alpha-equivalent inputs map to equal outputs.
FeatureStructure canonicalize(const FeatureStructure& fs);

// Navigates a dotted attribute path ("ARG1.CAT"); nullptr when absent.
const FeatureValue* value_at_path(const FeatureStructure& fs, std::string_view path);

}  // namespace lexlab::avm
