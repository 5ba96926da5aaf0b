// Batch CLI over the stable-range, character-polynomial, witness,
// coinvariant, and configuration-space calculators, plus `verify`, which
// runs the full oracle suite.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>

#include "stabrange/caps.hpp"
#include "stabrange/charpoly.hpp"
#include "stabrange/coinv.hpp"
#include "stabrange/config_spaces.hpp"
#include "stabrange/json_io.hpp"
#include "stabrange/verify.hpp"

namespace sr = stabrange;
using sr::json;

namespace {

struct Options {
  std::string format = "table";
  bool override_caps = false;

  bool want_json() const { return format == "json"; }
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

sr::Partition parse_partition(const std::string& text) {
  return sr::Partition(parse_int_list(text));
}

std::string read_poly_arg(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  return arg;
}

void print_ranges(const sr::StableRanges& r, const Options& opt) {
  if (opt.want_json()) {
    std::cout << sr::stable_ranges_to_json(r).dump() << "\n";
    return;
  }
  std::cout << "  t0  t1   A  hmax  delta    M\n";
  std::printf("%4ld%4ld%4ld%6ld%7ld%5ld\n", r.t0, r.t1, r.A, r.hmax, r.delta,
              r.M);
}

void print_lit_ranges(const sr::LitRanges& r, const Options& opt) {
  if (opt.want_json()) {
    std::cout << sr::lit_ranges_to_json(r).dump() << "\n";
    return;
  }
  std::cout << "  t0  t1   A  hmax  delta    M\n";
  std::printf("%4ld%4ld%4ld%6ld%7ld", r.t0, r.t1, r.A, r.hmax, r.delta);
  if (r.M.has_value())
    std::printf("%5ld\n", *r.M);
  else
    std::printf("    undetermined\n");
}

void print_poly(const sr::CharPoly& p, const Options& opt) {
  if (opt.want_json())
    std::cout << sr::charpoly_to_json(p).dump() << "\n";
  else
    std::cout << p.pretty() << "\n";
}

void print_class_function(const sr::ClassFunction& f, const Options& opt) {
  if (opt.want_json()) {
    std::cout << sr::class_function_to_json(f).dump() << "\n";
    return;
  }
  std::cout << "cycle type -> value (S_" << f.n() << ")\n";
  for (const auto& lambda : sr::partitions_of(f.n())) {
    std::cout << "  (";
    for (int i = 0; i < lambda.length(); ++i)
      std::cout << (i ? "," : "") << lambda.parts()[i];
    std::cout << ") -> " << sr::rat_to_string(f.value(lambda)) << "\n";
  }
}

int run_verify(int max_n, bool serial, const Options& opt) {
  auto results = sr::run_all_suites(max_n, !serial);
  bool all_ok = true;
  json summary = json::array();
  for (const auto& suite : results) {
    all_ok = all_ok && suite.ok();
    if (opt.want_json()) {
      summary.push_back({{"suite", suite.name},
                         {"passed", suite.passed},
                         {"failed", suite.failures.size()},
                         {"failures", suite.failures}});
    } else {
      std::printf("%-10s %6ld passed %4zu failed %s\n", suite.name.c_str(),
                  suite.passed, suite.failures.size(),
                  suite.ok() ? "ok" : "FAIL");
      for (const auto& f : suite.failures) std::cout << "    " << f << "\n";
    }
  }
  if (opt.want_json()) std::cout << summary.dump() << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact stable-range and character calculators"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  app.add_flag("--override-caps", opt.override_caps,
               "lift the documented enumeration caps");

  // ---- ranges ----
  auto* ranges = app.add_subcommand("ranges", "stable-range tuples");
  ranges->require_subcommand(1);
  long c = -1, g = -1, theta_k = 0, theta_k1 = -1, s = 1, k = 0;
  long total_degree = 1, a_deg = 0, b_deg = 0, g_prev = 0, g_k = 0;
  std::string theta_list, lit_kind = "cg";
  bool good_char = false;

  auto* cg = ranges->add_subcommand("cg", "tuple from local/stable degrees");
  cg->add_option("--c", c, "local degree")->required();
  cg->add_option("--g", g, "stable degree")->required();

  auto* hyper = ranges->add_subcommand("hyper", "tuple from hyperhomology");
  hyper->add_option("--theta-k", theta_k)->required();
  hyper->add_option("--theta-k1", theta_k1)->required();

  auto* chain = ranges->add_subcommand(
      "hyper-chain", "tuple from a strictly increasing degree sequence");
  chain->add_option("--theta", theta_list, "comma list, e.g. 0,2,4")
      ->required();
  chain->add_option("--k", k)->required();

  auto* coinv_r = ranges->add_subcommand("coinv", "coinvariant tuple");
  coinv_r->add_option("--total-degree", total_degree)->required();

  auto* cong = ranges->add_subcommand("congruence", "congruence tuple");
  cong->add_option("--s", s, "stable rank bound")->required();
  cong->add_option("--k", k, "homological degree")->required();

  auto* lit = ranges->add_subcommand("literature", "prior best tuples");
  lit->add_option("--kind", lit_kind)->check(CLI::IsMember({"cg", "congruence"}));
  lit->add_option("--c", c);
  lit->add_option("--g", g);
  lit->add_option("--s", s);
  lit->add_option("--k", k);
  lit->add_flag("--good-char", good_char,
                "field of characteristic zero or large");

  auto* regmax = ranges->add_subcommand(
      "reg-max", "max regularity from generation/presentation bounds");
  regmax->add_option("--a", a_deg)->required();
  regmax->add_option("--b", b_deg)->required();

  auto* reg = ranges->add_subcommand("reg", "regularity bound from (c,g)");
  reg->add_option("--c", c)->required();
  reg->add_option("--g", g)->required();

  auto* tb = ranges->add_subcommand("t-bounds", "t0/t1 bounds from (c,g)");
  tb->add_option("--c", c)->required();
  tb->add_option("--g", g)->required();

  auto* cxgen = ranges->add_subcommand("complex-gen",
                                       "homology generation bound");
  cxgen->add_option("--g-prev", g_prev)->required();
  cxgen->add_option("--g-k", g_k)->required();

  auto* hinv = ranges->add_subcommand("hyper-invariants",
                                      "invariant bounds from hyperhomology");
  hinv->add_option("--theta-k", theta_k)->required();
  hinv->add_option("--theta-k1", theta_k1)->required();

  // ---- charpoly ----
  auto* cp = app.add_subcommand("charpoly", "character polynomials");
  cp->require_subcommand(1);
  int series_j = 0, char_p = 0, h_offset = -1, trivial_g = -1;
  std::string poly_arg, lambda_arg, defpoly_input;
  bool whole_series = false;

  auto* cp_eval = cp->add_subcommand("eval", "evaluate on a cycle type");
  cp_eval->add_option("--poly", poly_arg, "term-list JSON, or - for stdin")
      ->required();
  cp_eval->add_option("--lambda", lambda_arg, "cycle type, e.g. 2,1")
      ->required();

  auto* cp_sym = cp->add_subcommand("sym", "S^(j) series coefficient");
  cp_sym->add_option("--j", series_j)->required();
  cp_sym->add_flag("--all", whole_series, "print S^(0..j)");

  auto* cp_coinv = cp->add_subcommand("coinv", "C^(j) series coefficient");
  cp_coinv->add_option("--j", series_j)->required();
  cp_coinv->add_flag("--all", whole_series, "print C^(0..j)");

  auto* cp_umbral = cp->add_subcommand("umbral", "apply the umbral operator");
  cp_umbral->add_option("--poly", poly_arg, "term-list JSON, or - for stdin")
      ->required();

  auto* cp_def = cp->add_subcommand("defpoly",
                                    "character polynomial of Specht data");
  cp_def->add_option("--input", defpoly_input,
                     "JSON {\"h\":..,\"W\":[class functions]}, or - for stdin");
  cp_def->add_option("--trivial-g", trivial_g,
                     "use trivial W_r for r = 0..g");
  cp_def->add_option("--hmax", h_offset, "local degree offset h")
      ->capture_default_str();
  cp_def->add_option("--char-p", char_p, "field characteristic (0 or prime)")
      ->capture_default_str();

  // ---- witness ----
  auto* wit = app.add_subcommand("witness", "witness family profile");
  std::string family = "I";
  long param = 0;
  int max_n = 8;
  wit->add_option("--family", family)->check(CLI::IsMember({"I", "T", "S", "V"}));
  wit->add_option("--param", param)->required();
  wit->add_option("--max-n", max_n, "dimension listing bound")
      ->capture_default_str();

  // ---- coinv ----
  auto* cv = app.add_subcommand("coinv", "diagonal coinvariant oracles");
  cv->require_subcommand(1);
  std::string J_arg;
  int cv_n = 1, cv_vars = 1, cv_maxtotal = 0, cv_j = 0;
  bool serial = false;

  auto* cv_orbits = cv->add_subcommand("orbits", "monomial orbit count");
  cv_orbits->add_option("--J", J_arg, "multidegree, e.g. 2,1")->required();
  cv_orbits->add_option("--n", cv_n)->required();

  auto* cv_dims = cv->add_subcommand("dims", "graded coinvariant dimensions");
  cv_dims->add_option("--n", cv_n)->required();
  cv_dims->add_option("--vars", cv_vars)->capture_default_str();
  cv_dims->add_option("--max-total", cv_maxtotal)->required();
  cv_dims->add_flag("--serial", serial, "use the serial reference kernel");

  auto* cv_char = cv->add_subcommand("char", "univariate graded character");
  cv_char->add_option("--j", cv_j)->required();
  cv_char->add_option("--n", cv_n)->required();

  // ---- config ----
  auto* cf = app.add_subcommand("config", "configuration-space formulas");
  cf->require_subcommand(1);
  int d = 2, u = 0, cfg_k = 1, der_r = 0, der_l = 0, hr_i = 1;
  long long big_n = 0;
  bool plane_exception = false;

  auto* cf_delta = cf->add_subcommand("delta", "generation degree delta_k");
  cf_delta->add_option("--d", d)->required();
  cf_delta->add_option("--u", u)->required();
  cf_delta->add_option("--k", cfg_k)->required();
  cf_delta->add_flag("--plane-exception", plane_exception);

  auto* cf_ranges = cf->add_subcommand("ranges", "configuration-space tuple");
  cf_ranges->add_option("--d", d)->required();
  cf_ranges->add_option("--u", u)->required();
  cf_ranges->add_option("--k", cfg_k)->required();
  cf_ranges->add_flag("--plane-exception", plane_exception);

  auto* cf_der = cf->add_subcommand("derangements",
                                    "derangements by cycle count");
  cf_der->add_option("--r", der_r)->required();
  cf_der->add_option("--l", der_l)->required();

  auto* cf_hr = cf->add_subcommand("hersh-reiner", "Euclidean configuration "
                                                   "cohomology dimension");
  cf_hr->add_option("--i", hr_i)->required();
  cf_hr->add_option("--n", big_n)->required();

  auto* cf_sphere = cf->add_subcommand("sphere", "sphere H^{d-1} dimension");
  cf_sphere->add_option("--n", big_n)->required();

  // ---- verify ----
  auto* ver = app.add_subcommand("verify", "run the full oracle suite");
  int verify_max_n = 6;
  bool verify_serial = false;
  ver->add_option("--max-n", verify_max_n)->capture_default_str();
  ver->add_flag("--serial", verify_serial, "run suites sequentially");

  // Global flags (--format, --override-caps) may appear after subcommands.
  auto enable_fallthrough = [](auto&& self, CLI::App* node) -> void {
    node->fallthrough();
    for (CLI::App* sub : node->get_subcommands({})) self(self, sub);
  };
  enable_fallthrough(enable_fallthrough, &app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (cg->parsed()) {
      print_ranges(sr::ranges_from_cg(sr::HypTriple(c, g)), opt);
    } else if (hyper->parsed()) {
      print_ranges(sr::ranges_from_hyper(theta_k, theta_k1), opt);
    } else if (chain->parsed()) {
      auto ints = parse_int_list(theta_list);
      std::vector<long> theta(ints.begin(), ints.end());
      print_ranges(sr::ranges_from_hyper_chain(theta, static_cast<int>(k)),
                   opt);
    } else if (coinv_r->parsed()) {
      print_ranges(sr::ranges_coinv(total_degree), opt);
    } else if (cong->parsed()) {
      print_ranges(sr::ranges_congruence(s, k), opt);
    } else if (lit->parsed()) {
      if (lit_kind == "cg")
        print_lit_ranges(sr::literature_cg(sr::HypTriple(c, g)), opt);
      else
        print_lit_ranges(sr::literature_congruence(s, k, good_char), opt);
    } else if (regmax->parsed()) {
      long value = sr::max_regularity(a_deg, b_deg);
      if (opt.want_json())
        std::cout << json{{"max_regularity", value}}.dump() << "\n";
      else
        std::cout << value << "\n";
    } else if (reg->parsed()) {
      long value = sr::regularity_bound(sr::HypTriple(c, g));
      if (opt.want_json())
        std::cout << json{{"regularity_bound", value}}.dump() << "\n";
      else
        std::cout << value << "\n";
    } else if (tb->parsed()) {
      auto [t0b, t1b] = sr::t_bounds(sr::HypTriple(c, g));
      if (opt.want_json())
        std::cout << json{{"t0", t0b}, {"t1", t1b}}.dump() << "\n";
      else
        std::cout << "t0 <= " << t0b << ", t1 <= " << t1b << "\n";
    } else if (cxgen->parsed()) {
      long value = sr::complex_generation_bound(g_prev, g_k);
      if (opt.want_json())
        std::cout << json{{"generation_bound", value}}.dump() << "\n";
      else
        std::cout << value << "\n";
    } else if (hinv->parsed()) {
      auto inv = sr::hyper_invariants(theta_k, theta_k1);
      json out{{"is_zero", inv.is_zero}};
      if (!inv.is_zero) {
        out["delta"] = inv.delta_bound;
        out["t0"] = inv.t0_bound;
        json hb = json::array();
        for (int j = 0; j <= 6; ++j) hb.push_back(inv.h_bound(j));
        out["h"] = hb;
        out["reg"] = inv.reg_bound;
      }
      if (opt.want_json()) {
        std::cout << out.dump() << "\n";
      } else if (inv.is_zero) {
        std::cout << "identically zero\n";
      } else {
        std::cout << "delta <= " << inv.delta_bound << ", t0 <= "
                  << inv.t0_bound << ", reg <= " << inv.reg_bound << "\n";
        for (int j = 0; j <= 3; ++j)
          std::cout << "h^" << j << " <= " << inv.h_bound(j) << "\n";
      }
    } else if (cp_eval->parsed()) {
      auto p = sr::charpoly_from_json(json::parse(read_poly_arg(poly_arg)));
      auto value = p.evaluate(parse_partition(lambda_arg));
      if (opt.want_json())
        std::cout << json{{"value", sr::rat_to_string(value)}}.dump() << "\n";
      else
        std::cout << sr::rat_to_string(value) << "\n";
    } else if (cp_sym->parsed() || cp_coinv->parsed()) {
      auto series = cp_sym->parsed()
                        ? sr::sym_series(series_j, opt.override_caps)
                        : sr::coinv_series(series_j, opt.override_caps);
      if (whole_series) {
        for (int j = 0; j <= series_j; ++j) {
          if (!opt.want_json()) std::cout << "t^" << j << ": ";
          print_poly(series[j], opt);
        }
      } else {
        print_poly(series[series_j], opt);
      }
    } else if (cp_umbral->parsed()) {
      auto p = sr::charpoly_from_json(json::parse(read_poly_arg(poly_arg)));
      print_poly(sr::umbral_down(p), opt);
    } else if (cp_def->parsed()) {
      std::vector<sr::ClassFunction> W;
      int h = h_offset;
      if (!defpoly_input.empty()) {
        json in = json::parse(read_poly_arg(defpoly_input));
        h = in.value("h", h_offset);
        for (const auto& w : in.at("W"))
          W.push_back(sr::class_function_from_json(w));
      } else if (trivial_g >= 0) {
        for (int r = 0; r <= trivial_g; ++r)
          W.push_back(sr::trivial_character(r));
      } else {
        std::cerr << "usage error: defpoly needs --input or --trivial-g\n";
        return 2;
      }
      print_poly(sr::def_poly(W, h, char_p), opt);
    } else if (wit->parsed()) {
      sr::WitnessFamily fam{sr::witness_kind_from_name(family), param};
      auto profile = sr::witness_profile(fam);
      auto report = sr::sharpness_check(fam, opt.override_caps);
      json dims = json::array();
      for (int n = 0; n <= max_n; ++n)
        dims.push_back(sr::witness_dim(fam, n));
      if (opt.want_json()) {
        json out{{"family", family},
                 {"param", param},
                 {"dims", dims},
                 {"profile", sr::witness_profile_to_json(profile)},
                 {"sharpness", sr::sharpness_report_to_json(report)}};
        std::cout << out.dump() << "\n";
      } else {
        std::cout << family << "(" << param << ")\n";
        std::cout << "dims 0.." << max_n << ":";
        for (const auto& v : dims) std::cout << " " << v.dump();
        std::cout << "\nregularity " << profile.regularity << ", triple (c="
                  << profile.triple.c << ", g=" << profile.triple.g << ")\n";
        print_ranges(profile.ranges, opt);
        std::cout << "sharpness: " << (report.passed() ? "pass" : "FAIL")
                  << "\n";
        for (const auto& note : report.notes)
          std::cout << "  " << note << "\n";
      }
    } else if (cv_orbits->parsed()) {
      sr::MultiDegree J(parse_int_list(J_arg));
      long long count = sr::orbit_count(J, cv_n, opt.override_caps);
      if (opt.want_json())
        std::cout << json{{"J", J.degrees()}, {"n", cv_n}, {"orbits", count}}
                         .dump()
                  << "\n";
      else
        std::cout << count << "\n";
    } else if (cv_dims->parsed()) {
      auto dims = sr::coinv_graded_dims(
          cv_n, cv_vars, cv_maxtotal, opt.override_caps,
          serial ? sr::ExecutionMode::serial : sr::ExecutionMode::parallel);
      if (opt.want_json()) {
        std::cout << sr::multidegree_dims_to_json(dims).dump() << "\n";
      } else {
        long long total = 0;
        for (const auto& [J, dim] : dims) {
          std::cout << "J=(";
          for (int i = 0; i < J.basis_size(); ++i)
            std::cout << (i ? "," : "") << J.degrees()[i];
          std::cout << ") dim " << dim << "\n";
          total += dim;
        }
        std::cout << "total " << total << "\n";
      }
    } else if (cv_char->parsed()) {
      print_class_function(
          sr::coinv_character_univariate(cv_j, cv_n, opt.override_caps), opt);
    } else if (cf_delta->parsed()) {
      long delta = sr::config_delta({d, u, cfg_k, plane_exception});
      if (opt.want_json())
        std::cout << json{{"delta", delta}}.dump() << "\n";
      else
        std::cout << delta << "\n";
    } else if (cf_ranges->parsed()) {
      print_ranges(sr::config_ranges({d, u, cfg_k, plane_exception}), opt);
    } else if (cf_der->parsed()) {
      long long count = sr::derangement_count(der_r, der_l);
      if (opt.want_json())
        std::cout << json{{"count", count}}.dump() << "\n";
      else
        std::cout << count << "\n";
    } else if (cf_hr->parsed()) {
      long long dim = sr::hersh_reiner_dim(hr_i, big_n);
      if (opt.want_json())
        std::cout << json{{"dim", dim}}.dump() << "\n";
      else
        std::cout << dim << "\n";
    } else if (cf_sphere->parsed()) {
      long long dim = sr::sphere_dim(big_n);
      if (opt.want_json())
        std::cout << json{{"dim", dim}}.dump() << "\n";
      else
        std::cout << dim << "\n";
    } else if (ver->parsed()) {
      return run_verify(verify_max_n, verify_serial, opt);
    }
  } catch (const sr::Error& e) {
    std::cerr << "error: " << e.code_name() << ": " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "usage error: bad JSON input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
