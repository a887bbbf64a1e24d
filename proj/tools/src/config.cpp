#include "toricsheaf_cli/config.hpp"

#include "toricsheaf/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <limits>
#include <regex>
#include <sstream>

namespace toricsheaf::cli {

using nlohmann::json;

Range parse_range(const std::string& text) {
  static const std::regex pattern(R"(\s*([+-]?\d+)\s*:\s*([+-]?\d+)\s*)");
  std::smatch match;
  if (!std::regex_match(text, match, pattern)) {
    throw InputError("range \"" + text + "\" is not of the form lo:hi");
  }
  try {
    return Range{std::stoll(match[1].str()), std::stoll(match[2].str())};
  } catch (const std::out_of_range&) {
    throw InputError("range \"" + text + "\" out of bounds");
  }
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw InputError(path + ": " + message);
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing key \"" + key + "\"");
  return *it;
}

std::int64_t integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<std::int64_t>();
}

int small_int(const json& v, const std::string& path) {
  auto x = integer(v, path);
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
    fail(path, "integer out of range");
  }
  return static_cast<int>(x);
}

Rational rational(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const InputError& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected an integer or a rational string such as \"3/2\"");
}

Range window_range(const json& v, const std::string& path) {
  if (v.is_string()) {
    try {
      return parse_range(v.get<std::string>());
    } catch (const InputError& e) {
      fail(path, e.what());
    }
  }
  if (v.is_array() && v.size() == 2) {
    return Range{integer(v[0], path + "[0]"), integer(v[1], path + "[1]")};
  }
  fail(path, "expected \"lo:hi\" or [lo, hi]");
}

ToricVariety parse_variety(const json& v, const std::string& path) {
  const std::string family_path = path + ".family";
  const json& fam = field(v, "family", path);
  if (!fam.is_string()) fail(family_path, "expected a string");
  const std::string family = fam.get<std::string>();
  try {
    if (family == "projective" || family == "projective_space") {
      return build_variety(ProjectiveSpace{small_int(field(v, "n", path), path + ".n")});
    }
    if (family == "hirzebruch") {
      return build_variety(Hirzebruch{small_int(field(v, "a", path), path + ".a")});
    }
    if (family == "split_bundle") {
      SplitBundle spec;
      spec.s = small_int(field(v, "s", path), path + ".s");
      const json& a = field(v, "a", path);
      if (!a.is_array()) fail(path + ".a", "expected an array of weights");
      for (std::size_t u = 0; u < a.size(); ++u) {
        spec.a.push_back(small_int(a[u], path + ".a[" + std::to_string(u) + "]"));
      }
      return build_variety(spec);
    }
  } catch (const InputError& e) {
    std::string msg = e.what();
    if (msg.rfind(path, 0) == 0) throw;
    fail(path, msg);
  }
  fail(family_path, "unknown family \"" + family +
                        "\" (expected projective, hirzebruch or split_bundle)");
}

KlyachkoFiltration parse_filtration(const json& f, std::size_t rank, const std::string& path) {
  const json& jumps_json = field(f, "jumps", path);
  if (!jumps_json.is_array()) fail(path + ".jumps", "expected an array");
  if (jumps_json.size() != rank) {
    fail(path + ".jumps", "expected " + std::to_string(rank) + " jumps, got " +
                              std::to_string(jumps_json.size()));
  }
  IntVector jumps;
  for (std::size_t j = 0; j < rank; ++j) {
    jumps.push_back(integer(jumps_json[j], path + ".jumps[" + std::to_string(j) + "]"));
  }

  std::vector<Subspace> spaces;
  if (!f.contains("spaces")) {
    // No spaces given: every step is the full space.
    return KlyachkoFiltration(std::move(jumps), std::vector<Subspace>(rank, Subspace::full(rank)));
  }
  json spaces_json = f.at("spaces");
  if (!spaces_json.is_array()) fail(path + ".spaces", "expected an array of spaces");
  if (spaces_json.size() != rank && spaces_json.size() + 1 != rank) {
    fail(path + ".spaces", "expected " + std::to_string(rank) + " spaces (or " +
                               std::to_string(rank - 1) + " with the full space implied)");
  }
  for (std::size_t j = 0; j < spaces_json.size(); ++j) {
    const std::string sp = path + ".spaces[" + std::to_string(j) + "]";
    const json& gens = spaces_json[j];
    if (!gens.is_array()) fail(sp, "expected a list of generator vectors");
    std::vector<RationalVector> vectors;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const std::string gp = sp + "[" + std::to_string(g) + "]";
      if (!gens[g].is_array()) fail(gp, "expected a vector");
      if (gens[g].size() != rank) {
        fail(gp, "vector has length " + std::to_string(gens[g].size()) + " but the rank is " +
                     std::to_string(rank));
      }
      RationalVector vec;
      for (std::size_t t = 0; t < rank; ++t) {
        vec.push_back(rational(gens[g][t], gp + "[" + std::to_string(t) + "]"));
      }
      vectors.push_back(std::move(vec));
    }
    spaces.push_back(span(vectors, rank));
  }
  if (spaces.size() + 1 == rank) spaces.push_back(Subspace::full(rank));
  return KlyachkoFiltration(std::move(jumps), std::move(spaces));
}

EquivariantReflexiveSheaf parse_sheaf(const json& root, const ToricVariety& X) {
  const auto rank_signed = integer(field(root, "rank", "$"), "$.rank");
  if (rank_signed < 1 || rank_signed > 255) fail("$.rank", "rank must be in 1..255");
  const auto rank = static_cast<std::size_t>(rank_signed);

  const json& list = field(root, "filtrations", "$");
  if (!list.is_array()) fail("$.filtrations", "expected an array");
  std::vector<std::optional<KlyachkoFiltration>> by_ray(X.ray_count());
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string path = "$.filtrations[" + std::to_string(i) + "]";
    std::size_t ray = i;
    if (list[i].is_object() && list[i].contains("ray")) {
      const json& name = list[i].at("ray");
      if (!name.is_string()) fail(path + ".ray", "expected a ray name");
      try {
        ray = X.ray_index(name.get<std::string>());
      } catch (const InputError& e) {
        fail(path + ".ray", e.what());
      }
    }
    if (ray >= X.ray_count()) fail(path, "more filtrations than rays");
    if (by_ray[ray]) fail(path + ".ray", "ray " + X.ray_names()[ray] + " given twice");
    try {
      by_ray[ray] = parse_filtration(list[i], rank, path);
    } catch (const InputError& e) {
      std::string msg = e.what();
      if (msg.rfind("$", 0) == 0) throw;
      fail(path, msg);
    }
  }
  std::vector<KlyachkoFiltration> filtrations;
  for (std::size_t k = 0; k < X.ray_count(); ++k) {
    if (!by_ray[k]) fail("$.filtrations", "no filtration for ray " + X.ray_names()[k]);
    filtrations.push_back(std::move(*by_ray[k]));
  }
  return EquivariantReflexiveSheaf(X, std::move(filtrations));
}

MonomialIdeal parse_ideal(const json& v) {
  MonomialIdeal ideal;
  ideal.n = small_int(field(v, "n", "$.ideal"), "$.ideal.n");
  const json& gens = field(v, "generators", "$.ideal");
  if (!gens.is_array()) fail("$.ideal.generators", "expected an array");
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::string gp = "$.ideal.generators[" + std::to_string(g) + "]";
    if (!gens[g].is_array()) fail(gp, "expected an exponent vector");
    IntVector e;
    for (std::size_t t = 0; t < gens[g].size(); ++t) {
      e.push_back(integer(gens[g][t], gp + "[" + std::to_string(t) + "]"));
    }
    ideal.generators.push_back(std::move(e));
  }
  try {
    check_ideal(ideal);
  } catch (const InputError& e) {
    fail("$.ideal", e.what());
  }
  return ideal;
}

}  // namespace

JobConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) fail("$", "expected a JSON object");

  JobConfig cfg;
  if (root.contains("variety")) {
    ToricVariety X = parse_variety(root.at("variety"), "$.variety");
    cfg.sheaf = parse_sheaf(root, X);
  }
  if (root.contains("ideal")) cfg.ideal = parse_ideal(root.at("ideal"));
  if (!cfg.sheaf && !cfg.ideal) fail("$", "expected a \"variety\" with filtrations or an \"ideal\"");
  if (root.contains("window")) {
    const json& w = root.at("window");
    if (!w.is_object()) fail("$.window", "expected an object");
    if (w.contains("p")) cfg.p_window = window_range(w.at("p"), "$.window.p");
    if (w.contains("q")) cfg.q_window = window_range(w.at("q"), "$.window.q");
  }
  return cfg;
}

JobConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace toricsheaf::cli
