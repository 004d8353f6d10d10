#include "avm/feature_structure.hpp"

#include <algorithm>
#include <cctype>

#include "common/error.hpp"

namespace lexlab::avm {

std::string to_upper_ascii(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::toupper(c));
  });
  return out;
}

std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

FeatureValue FeatureValue::atom(std::string_view text) {
  return FeatureValue(Atom{to_lower_ascii(text)});
}

FeatureValue FeatureValue::variable(std::string_view name) {
  return FeatureValue(Variable{std::string(name)});
}

FeatureValue FeatureValue::structure(FeatureStructure fs) {
  return FeatureValue(std::make_shared<const FeatureStructure>(std::move(fs)));
}

FeatureValue::Kind FeatureValue::kind() const {
  switch (rep_.index()) {
    case 0: return Kind::kAtom;
    case 1: return Kind::kVariable;
    default: return Kind::kStructure;
  }
}

const std::string& FeatureValue::atom_text() const {
  return std::get<Atom>(rep_).text;
}

const std::string& FeatureValue::variable_name() const {
  return std::get<Variable>(rep_).name;
}

const FeatureStructure& FeatureValue::structure() const {
  return *std::get<std::shared_ptr<const FeatureStructure>>(rep_);
}

bool FeatureValue::operator==(const FeatureValue& other) const {
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::kAtom: return atom_text() == other.atom_text();
    case Kind::kVariable: return variable_name() == other.variable_name();
    case Kind::kStructure: return structure() == other.structure();
  }
  return false;
}

void FeatureStructure::set(std::string_view name, FeatureValue value) {
  attrs_.insert_or_assign(to_upper_ascii(name), std::move(value));
}

const FeatureValue* FeatureStructure::find(std::string_view name) const {
  auto it = attrs_.find(to_upper_ascii(name));
  return it == attrs_.end() ? nullptr : &it->second;
}

bool FeatureStructure::operator==(const FeatureStructure& other) const {
  return attrs_ == other.attrs_;
}

const FeatureValue* Bindings::lookup(const std::string& var) const {
  auto it = map_.find(var);
  return it == map_.end() ? nullptr : &it->second;
}

void Bindings::bind(std::string var, FeatureValue value) {
  map_.insert_or_assign(std::move(var), std::move(value));
}

FeatureValue Bindings::walk(FeatureValue value) const {
  while (value.is_variable()) {
    const FeatureValue* bound = lookup(value.variable_name());
    if (bound == nullptr) break;
    value = *bound;
  }
  return value;
}

FeatureValue Bindings::resolve(const FeatureValue& value) const {
  FeatureValue walked = walk(value);
  if (walked.is_structure()) {
    return FeatureValue::structure(resolve(walked.structure()));
  }
  return walked;
}

FeatureStructure Bindings::resolve(const FeatureStructure& fs) const {
  FeatureStructure out;
  for (const auto& [name, value] : fs.attributes()) {
    out.set(name, resolve(value));
  }
  return out;
}

namespace {

std::string join_path(const std::string& prefix, const std::string& name) {
  return prefix.empty() ? name : prefix + "." + name;
}

// Does `var` occur in `value` once bindings are chased?
bool occurs(const std::string& var, const FeatureValue& value, const Bindings& binds) {
  FeatureValue walked = binds.walk(value);
  switch (walked.kind()) {
    case FeatureValue::Kind::kAtom:
      return false;
    case FeatureValue::Kind::kVariable:
      return walked.variable_name() == var;
    case FeatureValue::Kind::kStructure:
      for (const auto& [name, nested] : walked.structure().attributes()) {
        (void)name;
        if (occurs(var, nested, binds)) return true;
      }
      return false;
  }
  return false;
}

struct UnifyState {
  Bindings binds;
  std::optional<UnifyError> error;
  std::string path;

  void set_failure(UnifyError e, std::string p) {
    error = e;
    path = std::move(p);
  }
};

std::optional<FeatureStructure> unify_structs(const FeatureStructure& a,
                                              const FeatureStructure& b,
                                              const std::string& path,
                                              UnifyState& state);

std::optional<FeatureValue> unify_values(const FeatureValue& raw_x,
                                         const FeatureValue& raw_y,
                                         const std::string& path,
                                         UnifyState& state) {
  FeatureValue x = state.binds.walk(raw_x);
  FeatureValue y = state.binds.walk(raw_y);

  if (x.is_variable()) {
    if (y.is_variable() && y.variable_name() == x.variable_name()) return x;
    if (occurs(x.variable_name(), y, state.binds)) {
      state.set_failure(UnifyError::kOccursCheck, path);
      return std::nullopt;
    }
    state.binds.bind(x.variable_name(), y);
    return y;
  }
  if (y.is_variable()) {
    if (occurs(y.variable_name(), x, state.binds)) {
      state.set_failure(UnifyError::kOccursCheck, path);
      return std::nullopt;
    }
    state.binds.bind(y.variable_name(), x);
    return x;
  }
  if (x.is_atom() && y.is_atom()) {
    if (x.atom_text() == y.atom_text()) return x;
    state.set_failure(UnifyError::kConflict, path);
    return std::nullopt;
  }
  if (x.is_structure() && y.is_structure()) {
    auto merged = unify_structs(x.structure(), y.structure(), path, state);
    if (!merged) return std::nullopt;
    return FeatureValue::structure(std::move(*merged));
  }
  // atom vs nested structure
  state.set_failure(UnifyError::kConflict, path);
  return std::nullopt;
}

std::optional<FeatureStructure> unify_structs(const FeatureStructure& a,
                                              const FeatureStructure& b,
                                              const std::string& path,
                                              UnifyState& state) {
  FeatureStructure out;
  auto ia = a.attributes().begin();
  auto ib = b.attributes().begin();
  // Both maps are sorted; merge them so the first conflict found is the
  // first one in sorted-attribute order.
  while (ia != a.attributes().end() || ib != b.attributes().end()) {
    if (ib == b.attributes().end() ||
        (ia != a.attributes().end() && ia->first < ib->first)) {
      out.set(ia->first, ia->second);
      ++ia;
    } else if (ia == a.attributes().end() || ib->first < ia->first) {
      out.set(ib->first, ib->second);
      ++ib;
    } else {
      auto merged = unify_values(ia->second, ib->second,
                                 join_path(path, ia->first), state);
      if (!merged) return std::nullopt;
      out.set(ia->first, std::move(*merged));
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

UnifyResult UnifyResult::success(FeatureStructure merged, Bindings bindings) {
  UnifyResult r;
  r.merged_ = std::move(merged);
  r.bindings_ = std::move(bindings);
  return r;
}

UnifyResult UnifyResult::failure(UnifyError error, std::string path, Bindings bindings) {
  UnifyResult r;
  r.error_ = error;
  r.path_ = std::move(path);
  r.bindings_ = std::move(bindings);
  return r;
}

UnifyResult unify(const FeatureStructure& a, const FeatureStructure& b) {
  UnifyState state;
  auto merged = unify_structs(a, b, "", state);
  if (!merged) {
    return UnifyResult::failure(*state.error, state.path, std::move(state.binds));
  }
  FeatureStructure resolved = state.binds.resolve(*merged);
  return UnifyResult::success(std::move(resolved), std::move(state.binds));
}

namespace {

bool values_match(const FeatureValue& general, const FeatureValue& specific,
                  Bindings& binds);

bool structs_match(const FeatureStructure& general, const FeatureStructure& specific,
                   Bindings& binds) {
  for (const auto& [name, gv] : general.attributes()) {
    const FeatureValue* sv = specific.find(name);
    if (sv == nullptr) return false;
    if (!values_match(gv, *sv, binds)) return false;
  }
  return true;
}

bool values_match(const FeatureValue& general, const FeatureValue& specific,
                  Bindings& binds) {
  if (general.is_variable()) {
    const FeatureValue* bound = binds.lookup(general.variable_name());
    if (bound != nullptr) return *bound == specific;
    binds.bind(general.variable_name(), specific);
    return true;
  }
  if (general.is_atom()) {
    return specific.is_atom() && general.atom_text() == specific.atom_text();
  }
  return specific.is_structure() &&
         structs_match(general.structure(), specific.structure(), binds);
}

void canonicalize_value(const FeatureValue& in, FeatureValue& out,
                        std::map<std::string, std::string>& names);

FeatureStructure canonicalize_struct(const FeatureStructure& fs,
                                     std::map<std::string, std::string>& names) {
  FeatureStructure out;
  for (const auto& [name, value] : fs.attributes()) {
    FeatureValue v = value;
    canonicalize_value(value, v, names);
    out.set(name, std::move(v));
  }
  return out;
}

void canonicalize_value(const FeatureValue& in, FeatureValue& out,
                        std::map<std::string, std::string>& names) {
  switch (in.kind()) {
    case FeatureValue::Kind::kAtom:
      out = in;
      return;
    case FeatureValue::Kind::kVariable: {
      auto it = names.find(in.variable_name());
      if (it == names.end()) {
        std::string fresh = "V" + std::to_string(names.size() + 1);
        it = names.emplace(in.variable_name(), std::move(fresh)).first;
      }
      out = FeatureValue::variable(it->second);
      return;
    }
    case FeatureValue::Kind::kStructure:
      out = FeatureValue::structure(canonicalize_struct(in.structure(), names));
      return;
  }
}

}  // namespace

bool subsumes(const FeatureStructure& general, const FeatureStructure& specific) {
  Bindings binds;
  return structs_match(general, specific, binds);
}

FeatureStructure canonicalize(const FeatureStructure& fs) {
  std::map<std::string, std::string> names;
  return canonicalize_struct(fs, names);
}

const FeatureValue* value_at_path(const FeatureStructure& fs, std::string_view path) {
  const FeatureStructure* cur = &fs;
  const FeatureValue* found = nullptr;
  while (!path.empty()) {
    auto dot = path.find('.');
    std::string_view head = path.substr(0, dot);
    found = cur->find(head);
    if (found == nullptr) return nullptr;
    if (dot == std::string_view::npos) return found;
    if (!found->is_structure()) return nullptr;
    cur = &found->structure();
    path.remove_prefix(dot + 1);
  }
  return found;
}

}  // namespace lexlab::avm
