#include "toricsheaf_cli/cli.hpp"

#include "toricsheaf/cohomology.hpp"
#include "toricsheaf/errors.hpp"
#include "toricsheaf/hilbert.hpp"
#include "toricsheaf/monomial.hpp"
#include "toricsheaf_cli/config.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace toricsheaf::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string config;
  std::string p_range, q_range;
  std::string format;
  std::string out;
  int i = 1;
  int n = 2;
  std::string gens;
  std::string cone;
};

struct Table {
  std::string command;
  std::string row_axis = "q", col_axis = "p";
  std::optional<int> degree;
  std::vector<std::int64_t> cols;  // ascending
  std::vector<std::int64_t> rows;  // descending; empty means one unlabelled row
  std::vector<std::vector<std::int64_t>> values;
  std::optional<std::vector<std::vector<bool>>> marked;
};

std::string render_csv(const Table& t) {
  std::ostringstream os;
  os << t.row_axis << '\\' << t.col_axis;
  for (auto c : t.cols) os << ',' << c;
  os << '\n';
  for (std::size_t r = 0; r < t.values.size(); ++r) {
    if (t.rows.empty()) {
      os << '-';
    } else {
      os << t.rows[r];
    }
    for (std::size_t c = 0; c < t.values[r].size(); ++c) {
      os << ',' << t.values[r][c];
      if (t.marked && (*t.marked)[r][c]) os << '*';
    }
    os << '\n';
  }
  return os.str();
}

std::string render_json(const Table& t) {
  json j;
  j["command"] = t.command;
  if (t.degree) j["i"] = *t.degree;
  j[t.col_axis] = t.cols;
  j[t.row_axis] = t.rows;
  j["values"] = t.values;
  if (t.marked) j["in_omega"] = *t.marked;
  return j.dump(2) + "\n";
}

std::vector<std::int64_t> ascending(const Range& r) {
  std::vector<std::int64_t> v;
  for (auto x = r.lo; x <= r.hi; ++x) v.push_back(x);
  return v;
}

class Runner {
 public:
  Runner(std::ostream& err) : err_(err) {}

  int dispatch(const std::string& command, const Options& opt, std::string& output) {
    opt_ = &opt;
    command_ = command;
    if (command == "monomial-sigma") return monomial_sigma(output);

    if (opt.config.empty()) throw InputError("--config is required for " + command);
    cfg_ = load_config(opt.config);
    if (!cfg_.sheaf) throw InputError("config has no sheaf (\"variety\" and \"filtrations\")");
    const auto diags = validate(*cfg_.sheaf);
    if (command == "validate") return validate_report(diags, output);
    if (!diags.empty()) {
      for (const auto& d : diags) err_ << "invalid: " << d.message << '\n';
      return Invalid;
    }
    if (command == "bounds") return bounds(output);
    if (command == "hilbert-poly") return hilbert_poly(output);
    return table(output);
  }

 private:
  bool json_format(bool tabular) const {
    const std::string& f = opt_->format;
    if (f.empty()) return false;
    if (f == "json") return true;
    if (tabular && f == "csv") return false;
    if (!tabular && f == "text") return false;
    throw InputError("format \"" + f + "\" not available for " + command_ +
                     (tabular ? " (use csv or json)" : " (use text or json)"));
  }

  Range range_for(const std::string& flag, const std::string& text,
                  const std::optional<Range>& window) const {
    if (!text.empty()) return parse_range(text);
    if (window) return *window;
    throw InputError(flag + " lo:hi is required (or a \"window\" in the config)");
  }

  int validate_report(const std::vector<Diagnostic>& diags, std::string& output) {
    const bool as_json = json_format(false);
    if (as_json) {
      json j;
      j["command"] = "validate";
      j["valid"] = diags.empty();
      j["diagnostics"] = json::array();
      for (const auto& d : diags) {
        j["diagnostics"].push_back(
            {{"ray", cfg_.sheaf->variety().ray_names()[d.ray]}, {"message", d.message}});
      }
      output = j.dump(2) + "\n";
    } else if (diags.empty()) {
      output = "valid: " + cfg_.sheaf->variety().describe() + ", rank " +
               std::to_string(cfg_.sheaf->rank()) + "\n";
    } else {
      for (const auto& d : diags) output += "invalid: " + d.message + "\n";
    }
    return diags.empty() ? Ok : Invalid;
  }

  int bounds(std::string& output) {
    const auto& E = *cfg_.sheaf;
    const SupportRegion lower = lower_bound_region(E);
    const auto upper = upper_bound_regions(E);
    const SupportRegion omega = regularity_region(E);
    if (json_format(false)) {
      auto region = [](const SupportRegion& r) {
        json j;
        j["name"] = r.name();
        j["inequalities"] = {r.halves[0].to_string(), r.halves[1].to_string()};
        j["halfplanes"] = json::array();
        for (const auto& h : r.halves) {
          j["halfplanes"].push_back({{"p", h.cp}, {"q", h.cq}, {"bound", h.bound}});
        }
        return j;
      };
      json j;
      j["command"] = "bounds";
      j["L_E"] = region(lower);
      j["U_E"] = json::array();
      for (const auto& r : upper) j["U_E"].push_back(region(r));
      j["omega"] = region(omega);
      output = j.dump(2) + "\n";
    } else {
      output += lower.to_string() + "\n";
      output += "U_E is the union of:\n";
      for (const auto& r : upper) output += "  " + r.to_string() + "\n";
      output += omega.to_string() + "\n";
    }
    return Ok;
  }

  int hilbert_poly(std::string& output) {
    const RationalPolynomial P = hilbert_polynomial(*cfg_.sheaf);
    const std::string text = P.to_string({"p", "q"});
    if (json_format(false)) {
      json j;
      j["command"] = "hilbert-poly";
      j["polynomial"] = text;
      j["terms"] = json::array();
      for (const auto& [e, c] : P.terms()) {
        j["terms"].push_back({{"p", e[0]}, {"q", e[1]}, {"coefficient", to_string(c)}});
      }
      output = j.dump(2) + "\n";
    } else {
      output = "P(p,q) = " + text + "\n";
    }
    return Ok;
  }

  int table(std::string& output) {
    const auto& E = *cfg_.sheaf;
    const auto& X = E.variety();
    const bool as_json = json_format(true);
    Table t;
    t.command = command_;
    const bool two_d = X.class_rank() == 2;
    t.cols = ascending(range_for("--p", opt_->p_range, cfg_.p_window));
    if (two_d) {
      t.rows = ascending(range_for("--q", opt_->q_range, cfg_.q_window));
      std::reverse(t.rows.begin(), t.rows.end());
    } else if (!opt_->q_range.empty()) {
      throw InputError("--q is meaningless when the class group has rank 1");
    }

    CohomologyCalculator calc(E);
    std::function<std::int64_t(const ClassElement&)> cell;
    if (command_ == "h0-table") {
      cell = [&](const ClassElement& c) { return calc.h0(c); };
    } else if (command_ == "euler-table") {
      cell = [&](const ClassElement& c) { return calc.euler(c); };
    } else if (command_ == "cohomology-table") {
      const int i = opt_->i;
      t.degree = i;
      const int dim = static_cast<int>(X.dim());
      if (i < 0 || i > dim) throw InputError("--i must lie in 0.." + std::to_string(dim));
      if (i == 0) {
        cell = [&](const ClassElement& c) { return calc.h0(c); };
      } else {
        cell = [&, i](const ClassElement& c) { return calc.cech(c)[static_cast<std::size_t>(i)]; };
      }
    } else if (command_ == "hilbert-table") {
      auto h = std::make_shared<HilbertEvaluator>(E);
      cell = [h](const ClassElement& c) { return (*h)(c); };
    } else {
      throw InputError("unknown command " + command_);
    }

    std::optional<SupportRegion> omega;
    if (command_ == "hilbert-table" && X.is_split_bundle()) omega = regularity_region(E);

    const std::size_t nrows = two_d ? t.rows.size() : (t.cols.empty() ? 0 : 1);
    if (omega) t.marked.emplace();
    for (std::size_t r = 0; r < nrows; ++r) {
      std::vector<std::int64_t> row;
      std::vector<bool> marks;
      for (auto p : t.cols) {
        ClassElement c{two_d ? IntVector{p, t.rows[r]} : IntVector{p}};
        row.push_back(cell(c));
        if (omega) marks.push_back(omega->contains(p, t.rows[r]));
      }
      t.values.push_back(std::move(row));
      if (omega) t.marked->push_back(std::move(marks));
    }
    output = as_json ? render_json(t) : render_csv(t);
    return Ok;
  }

  int monomial_sigma(std::string& output) {
    MonomialIdeal ideal;
    std::optional<Range> pw, qw;
    if (!opt_->config.empty()) {
      cfg_ = load_config(opt_->config);
      if (!cfg_.ideal) throw InputError("config has no \"ideal\"");
      ideal = *cfg_.ideal;
      pw = cfg_.p_window;
      qw = cfg_.q_window;
    } else {
      ideal.n = opt_->n;
      std::stringstream gens(opt_->gens);
      std::string item;
      while (std::getline(gens, item, ';')) {
        IntVector g;
        std::stringstream entries(item);
        std::string e;
        while (std::getline(entries, e, ',')) {
          try {
            std::size_t used = 0;
            g.push_back(std::stoll(e, &used));
            if (used != e.size()) throw std::invalid_argument(e);
          } catch (const std::logic_error&) {
            throw InputError("bad exponent \"" + e + "\" in --gens");
          }
        }
        ideal.generators.push_back(std::move(g));
      }
    }
    check_ideal(ideal);
    if (ideal.n != 2) throw UnsupportedError("monomial-sigma tables are drawn for P^2 only");

    const ToricVariety X = build_variety(ProjectiveSpace{ideal.n});
    Cone cone;
    std::stringstream names(opt_->cone);
    std::string name;
    while (std::getline(names, name, ',')) {
      if (name.empty() || name == "zero") continue;
      cone.rays.push_back(X.ray_index(name));
    }
    std::sort(cone.rays.begin(), cone.rays.end());
    cone.rays.erase(std::unique(cone.rays.begin(), cone.rays.end()), cone.rays.end());
    if (cone.rays.size() > X.dim()) throw InputError("a cone of P^2 has at most 2 rays");
    cone.codim = X.dim() - cone.rays.size();

    Table t;
    t.command = command_;
    t.col_axis = "d1";
    t.row_axis = "d2";
    t.cols = ascending(range_for("--p", opt_->p_range, pw));
    t.rows = ascending(range_for("--q", opt_->q_range, qw));
    std::reverse(t.rows.begin(), t.rows.end());
    for (auto d2 : t.rows) {
      std::vector<std::int64_t> row;
      for (auto d1 : t.cols) row.push_back(sigma_piece_dim(ideal, cone, {d1, d2}));
      t.values.push_back(std::move(row));
    }
    output = json_format(true) ? render_json(t) : render_csv(t);
    return Ok;
  }

  std::ostream& err_;
  const Options* opt_ = nullptr;
  std::string command_;
  JobConfig cfg_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology and Hilbert functions of equivariant reflexive sheaves on toric varieties",
               "toricsheaf"};
  app.require_subcommand(1);
  Options opt;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate", "check the filtration invariants of a sheaf"},
      {"h0-table", "global sections over a window of twists"},
      {"cohomology-table", "h^i over a window of twists"},
      {"euler-table", "Euler characteristic over a window of twists"},
      {"hilbert-table", "Hilbert function by lattice-point counting"},
      {"bounds", "support bounds and regularity region (split bundles)"},
      {"hilbert-poly", "Hilbert polynomial (split bundles)"},
      {"monomial-sigma", "sigma-pieces of a monomial ideal on P^2"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (name != "monomial-sigma") {
      sub->add_option("--config", opt.config, "JSON job file")->required();
    } else {
      sub->add_option("--config", opt.config, "JSON file with an \"ideal\" key");
      sub->add_option("--n", opt.n, "projective dimension");
      sub->add_option("--gens", opt.gens, "generators, e.g. \"0,0,2;1,0,1;1,1,0\"");
      sub->add_option("--cone", opt.cone, "comma-separated ray names; empty for the zero cone");
    }
    if (name == "cohomology-table") sub->add_option("--i", opt.i, "cohomological degree")->required();
    if (name != "validate" && name != "bounds" && name != "hilbert-poly") {
      sub->add_option("--p", opt.p_range, "p range lo:hi (use --p=-3:3 for negative ranges)");
      sub->add_option("--q", opt.q_range, "q range lo:hi");
    }
    sub->add_option("--format", opt.format, "csv | json (tables), text | json (reports)");
    sub->add_option("--out", opt.out, "write the result to this file");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? Ok : Invalid;
  }

  std::string command = app.get_subcommands().front()->get_name();
  std::string output;
  int code = Ok;
  try {
    Runner runner(err);
    code = runner.dispatch(command, opt, output);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return Invalid;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << '\n';
    return Unsupported;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return Inconsistent;
  }

  if (!opt.out.empty()) {
    std::ofstream file(opt.out);
    if (!file) {
      err << "error: cannot write " << opt.out << '\n';
      return Invalid;
    }
    file << output;
  } else {
    out << output;
  }
  return code;
}

}  // namespace toricsheaf::cli
