// Command-line front end: parse JSON inputs, dispatch computations, print
// exact integers in decimal.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <random>

#include "qgr/json_io.hpp"

using nlohmann::json;

namespace {

json load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qgr::Error("ParseError", "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw qgr::Error("ParseError", std::string("invalid JSON in '") + path + "': " + e.what());
  }
  return j;
}

void print_value(const qgr::Int& value, bool as_json) {
  if (as_json)
    std::cout << json{{"value", value.str()}}.dump() << "\n";
  else
    std::cout << value.str() << "\n";
}

int exit_code_for(const qgr::Error& e) {
  const std::string& c = e.code();
  if (c == "EnumerationBudgetExceeded") return 4;
  if (c == "UnsupportedBandFlag" || c == "NotSupported" || c == "UnsupportedModule" ||
      c == "MixedKinds")
    return 3;
  return 2;
}

// The sweep behind `oracle band-formula-vs-recursion`: identity windings on
// cycles realize every sign pattern as a primitive band.
long long sweep_band_oracle(int max_l, int max_n, int random_cases, unsigned seed) {
  long long cases = 0;
  auto check = [&](const std::vector<int>& eps, const std::vector<long long>& t, long long n) {
    qgr::BandProfile p{eps, t, n};
    qgr::Int a = qgr::band_formula(p);
    qgr::Int b = qgr::band_recursion_oracle(p);
    if (a != b) throw qgr::Error("OracleMismatch", "band formula and recursion disagree");
    ++cases;
  };
  for (int l = 1; l <= max_l; ++l) {
    for (int mask = 0; mask < (1 << l); ++mask) {
      std::vector<int> eps(l);
      for (int i = 0; i < l; ++i) eps[i] = (mask >> i) & 1 ? +1 : -1;
      for (long long n = 1; n <= max_n; ++n) {
        std::vector<long long> t(l, 0);
        auto rec = [&](auto&& self, int i) -> void {
          if (i == l) {
            check(eps, t, n);
            return;
          }
          for (long long x = 0; x <= n; ++x) {
            t[i] = x;
            self(self, i + 1);
          }
        };
        rec(rec, 0);
      }
    }
  }
  std::mt19937 rng(seed);
  for (int c = 0; c < random_cases; ++c) {
    int l = 1 + static_cast<int>(rng() % 8);
    long long n = 1 + static_cast<long long>(rng() % 4);
    std::vector<int> eps(l);
    std::vector<long long> t(l);
    for (int i = 0; i < l; ++i) eps[i] = rng() % 2 ? +1 : -1;
    for (int i = 0; i < l; ++i) t[i] = static_cast<long long>(rng() % (n + 1));
    check(eps, t, n);
  }
  return cases;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Euler characteristics of quiver Grassmannians and Hall algebra products"};
  app.require_subcommand(1);
  std::string output_format = "plain";
  app.add_option("--output", output_format, "output format: plain | json")
      ->check(CLI::IsMember({"plain", "json"}));
  bool json_flag = false;
  app.add_flag("--json", json_flag, "shorthand for --output json");

  std::string path, dim_flag, dims_flag, left_path, right_path, module_path;

  auto* validate = app.add_subcommand("validate", "validate a quiver/winding/module/algebra file");
  validate->add_option("file", path)->required();

  auto* euler = app.add_subcommand("euler", "Euler characteristic of a quiver Grassmannian");
  euler->add_option("module", path)->required();
  euler->add_option("--dim", dim_flag, "dimension vector, e.g. \"1=2,2=1\"")->required();

  auto* flag = app.add_subcommand("flag", "Euler characteristic of a quiver flag variety");
  flag->add_option("module", path)->required();
  flag->add_option("--dims", dims_flag, "';'-separated dimension vectors in chain order")->required();

  auto* hall = app.add_subcommand("hall", "evaluate a Hall product (1_left * 1_right)(module)");
  hall->add_option("left", left_path)->required();
  hall->add_option("right", right_path)->required();
  hall->add_option("module", module_path)->required();

  int max_length = 4;
  bool list_bands = false;
  auto* strings = app.add_subcommand("strings", "list string (or band) classes of a string algebra");
  strings->add_option("algebra", path)->required();
  strings->add_option("--max-length", max_length, "maximal number of walk arrows");
  strings->add_flag("--bands", list_bands, "list band classes instead of strings");

  auto* oracle = app.add_subcommand("oracle", "independent cross-check modes");
  oracle->require_subcommand(1);
  int max_l = 5, max_n = 3, random_cases = 100;
  unsigned seed = 20240611;
  auto* band_sweep =
      oracle->add_subcommand("band-formula-vs-recursion", "sweep the two band evaluations");
  band_sweep->add_option("--max-l", max_l);
  band_sweep->add_option("--max-n", max_n);
  band_sweep->add_option("--random", random_cases);
  band_sweep->add_option("--seed", seed);

  long long multiplicity = 1;
  auto* fixed_point = oracle->add_subcommand("fixed-point", "iterated-refinement fixed point count");
  fixed_point->add_option("winding", path)->required();
  fixed_point->add_option("--dim", dim_flag)->required();
  fixed_point->add_option("-n,--multiplicity", multiplicity, "band multiplicity (default 1)");

  auto* refine = oracle->add_subcommand("refine", "refine a graded winding; prints Q', F', G");
  refine->add_option("file", path, "JSON {\"winding\":..., \"grading\":...}")->required();

  CLI11_PARSE(app, argc, argv);
  const bool output_json = json_flag || output_format == "json";

  try {
    if (*validate) {
      json j = load(path);
      std::string kind;
      if (j.contains("relations")) {
        qgr::parse_string_algebra(j);
        kind = "algebra";
      } else if (j.contains("summands")) {
        qgr::parse_module(j);
        kind = "module";
      } else if (j.contains("vmap")) {
        qgr::Winding w = qgr::parse_winding(j);
        // Bands additionally need primitivity.
        if (classify_quiver(w.domain()).kind == qgr::QuiverClass::Kind::TypeATilde)
          qgr::validate_band(w);
        kind = "winding";
      } else {
        qgr::parse_quiver(j);
        kind = "quiver";
      }
      std::cout << "OK " << kind << "\n";
    } else if (*euler) {
      qgr::ModuleExpr m = qgr::parse_module(load(path));
      print_value(qgr::euler_module(m, qgr::parse_dim_flag(m.codomain(), dim_flag)), output_json);
    } else if (*flag) {
      qgr::ModuleExpr m = qgr::parse_module(load(path));
      print_value(qgr::euler_flag_module(m, qgr::parse_dims_flag(m.codomain(), dims_flag)),
                  output_json);
    } else if (*hall) {
      qgr::ModuleExpr m = qgr::parse_module(load(module_path));
      qgr::HallFunction f = qgr::parse_hall(load(left_path), m.codomain());
      qgr::HallFunction g = qgr::parse_hall(load(right_path), m.codomain());
      print_value(qgr::product_evaluate(f, g, m), output_json);
    } else if (*strings) {
      qgr::StringAlgebra a = qgr::parse_string_algebra(load(path));
      auto classes =
          list_bands ? qgr::enumerate_bands(a, max_length) : qgr::enumerate_strings(a, max_length);
      for (const auto& w : classes) std::cout << qgr::winding_to_json(w).dump() << "\n";
    } else if (*band_sweep) {
      long long cases = sweep_band_oracle(max_l, max_n, random_cases, seed);
      std::cout << "OK " << cases << " cases\n";
    } else if (*fixed_point) {
      qgr::Winding w = qgr::parse_winding(load(path));
      print_value(
          qgr::fixed_point_count(w, multiplicity, qgr::parse_dim_flag(w.codomain(), dim_flag)),
          output_json);
    } else if (*refine) {
      json j = load(path);
      qgr::Winding w = qgr::parse_winding(j.at("winding"));
      qgr::Grading g = qgr::parse_grading(j.at("grading"), w.domain());
      if (!qgr::validate_nice(w, g, {}))
        throw qgr::Error("NotNice", "the grading is not nice for this winding");
      qgr::Refinement r = qgr::refine_winding(w, g);
      json out = {{"qprime", qgr::quiver_to_json(r.qprime)},
                  {"fprime", qgr::winding_to_json(r.fprime)},
                  {"g", qgr::winding_to_json(r.g)}};
      std::cout << out.dump(2) << "\n";
    }
  } catch (const qgr::Error& e) {
    std::cerr << json{{"error", e.code()}, {"detail", e.what()}}.dump() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "InternalError"}, {"detail", e.what()}}.dump() << "\n";
    return 2;
  }
  return 0;
}
