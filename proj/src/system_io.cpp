#include "triplex/system_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "triplex/errors.hpp"

namespace triplex {

using nlohmann::json;

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + byte, '\n'));
}

const json& field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t as_index(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ValidationError(where + ": expected a nonnegative integer");
  }
  return v.get<std::size_t>();
}

std::size_t parse_index_key(const std::string& key, const std::string& where) {
  if (key.empty() || !std::all_of(key.begin(), key.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ValidationError(where + ": bad index key \"" + key + "\"");
  }
  return std::stoul(key);
}

SparseVector parse_value(const json& v, std::size_t dim, const std::string& where) {
  if (!v.is_object()) throw ValidationError(where + ": \"value\" must be an object");
  std::vector<SparseVector::Entry> e;
  for (const auto& [key, val] : v.items()) {
    const std::size_t i = parse_index_key(key, where);
    if (i >= dim) throw ValidationError(where + ": index " + key + " out of range");
    if (!val.is_string()) throw ValidationError(where + ": coefficients must be strings");
    e.emplace_back(i, parse_scalar(val.get<std::string>()));
  }
  return SparseVector(dim, std::move(e));
}

json value_json(std::span<const Scalar> v) {
  json out = json::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out[std::to_string(i)] = to_string(v[i]);
  return out;
}

}  // namespace

SystemDocument parse_system(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ValidationError("malformed JSON at line " + std::to_string(line_of(text, e.byte)) +
                          ": " + e.what());
  }
  if (!doc.is_object()) throw ValidationError("system document must be a JSON object");

  const json& kind_j = field(doc, "kind");
  if (!kind_j.is_string()) throw ValidationError("\"kind\" must be a string");
  const std::string kind = kind_j.get<std::string>();
  if (kind != "lts" && kind != "lie") throw ValidationError("unknown kind \"" + kind + "\"");
  const std::size_t arity = kind == "lts" ? 3 : 2;

  const std::string name = doc.contains("name") && doc["name"].is_string()
                               ? doc["name"].get<std::string>()
                               : std::string("unnamed");
  const std::size_t dim = as_index(field(doc, "dim"), "\"dim\"");
  if (dim == 0) throw ValidationError("\"dim\" must be positive");

  const json& basis_j = field(doc, "basis");
  if (!basis_j.is_array() || basis_j.size() != dim) {
    throw ValidationError("\"basis\" must list exactly dim labels");
  }
  std::vector<std::string> basis;
  for (const auto& b : basis_j) {
    if (!b.is_string() || b.get<std::string>().empty()) throw ValidationError("basis labels must be nonempty strings");
    basis.push_back(b.get<std::string>());
  }

  const json& entries_j = field(doc, "entries");
  if (!entries_j.is_array()) throw ValidationError("\"entries\" must be an array");

  std::vector<TripleSystem::Entry> lts_entries;
  std::vector<LieAlgebra::Entry> lie_entries;
  for (std::size_t n = 0; n < entries_j.size(); ++n) {
    const std::string where = "entry " + std::to_string(n);
    const json& ent = entries_j[n];
    if (!ent.is_object()) throw ValidationError(where + ": must be an object");
    const json& args = field(ent, "args");
    if (!args.is_array() || args.size() != arity) {
      throw ValidationError(where + ": \"args\" must have " + std::to_string(arity) + " indices");
    }
    std::array<std::size_t, 3> idx{};
    for (std::size_t k = 0; k < arity; ++k) {
      idx[k] = as_index(args[k], where);
      if (idx[k] >= dim) throw ValidationError(where + ": index out of range");
    }
    SparseVector value = parse_value(field(ent, "value"), dim, where);
    if (arity == 3) {
      lts_entries.push_back({idx, std::move(value)});
    } else {
      lie_entries.push_back({{idx[0], idx[1]}, std::move(value)});
    }
  }
  if (arity == 3) return TripleSystem::create(name, basis, lts_entries);
  return LieAlgebra::create(name, basis, lie_entries);
}

SystemDocument load_system(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_system(ss.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

TripleSystem load_triple_system(const std::filesystem::path& path) {
  SystemDocument doc = load_system(path);
  if (auto* t = std::get_if<TripleSystem>(&doc)) return *t;
  return lts_from_lie(std::get<LieAlgebra>(doc));
}

namespace {

std::string render(const std::string& name, const char* kind, const std::vector<std::string>& basis,
                   const std::vector<json>& entries) {
  std::ostringstream os;
  os << "{\n  \"name\": " << json(name).dump() << ",\n  \"kind\": \"" << kind
     << "\",\n  \"dim\": " << basis.size() << ",\n  \"basis\": " << json(basis).dump()
     << ",\n  \"entries\": [";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    os << (i ? ",\n    " : "\n    ") << entries[i].dump();
  }
  os << (entries.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

bool all_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s == 0; });
}

}  // namespace

std::string dump_system(const TripleSystem& t) {
  std::vector<json> entries;
  const std::size_t d = t.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Vec& v = t.constant(i, j, k);
        if (all_zero(v)) continue;
        json e;
        e["args"] = {i, j, k};
        e["value"] = value_json(v);
        entries.push_back(std::move(e));
      }
  return render(t.name(), "lts", t.basis_names(), entries);
}

std::string dump_system(const LieAlgebra& l) {
  std::vector<json> entries;
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j) {
      const Vec& v = l.constant(i, j);
      if (all_zero(v)) continue;
      json e;
      e["args"] = {i, j};
      e["value"] = value_json(v);
      entries.push_back(std::move(e));
    }
  return render(l.name(), "lie", l.basis_names(), entries);
}

}  // namespace triplex
