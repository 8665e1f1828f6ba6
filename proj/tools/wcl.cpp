// Command-line front end: root-system queries, parabolic sweeps, Lie
// centralizer reports, finite-group suites, and the full verification run.
//
// Exit codes: 0 = all verdicts as expected, 1 = an unexpected verdict,
// 2 = usage or internal error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "wcl/chevalley.hpp"
#include "wcl/parabolic.hpp"
#include "wcl/report.hpp"
#include "wcl/root_system.hpp"
#include "wcl/verify.hpp"
#include "wcl/weak_closure.hpp"

namespace {

using wcl::Json;

struct Output {
  std::string path;  // empty = stdout
  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + path);
    f << text;
  }
};

std::string coeff_string(const wcl::RootSystem& rs, int root) {
  std::string s = "(";
  const auto& c = rs.root(root).coeffs;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
  return s + ")";
}

int cmd_roots(char type, int rank, bool as_json, const Output& out) {
  wcl::RootSystem rs = wcl::RootSystem::build(type, rank);
  if (as_json) {
    Json j;
    j["type"] = std::string(1, type);
    j["rank"] = rank;
    j["num_roots"] = rs.num_roots();
    j["num_positive"] = rs.num_positive();
    j["highest_root_coeffs"] = rs.root(rs.highest_root()).coeffs;
    j["dim_g"] = rs.dim_g();
    j["dim_b"] = rs.dim_b();
    out.write(j.dump(2) + "\n");
  } else {
    std::string s = rs.name() + ": |Psi| = " + std::to_string(rs.num_roots()) +
                    ", |Psi+| = " + std::to_string(rs.num_positive()) +
                    ", highest root " + coeff_string(rs, rs.highest_root()) +
                    ", dim G = " + std::to_string(rs.dim_g()) +
                    ", dim B = " + std::to_string(rs.dim_b()) + "\n";
    out.write(s);
  }
  return 0;
}

int cmd_parabolics(char type, int rank, int p, const std::string& format, const Output& out) {
  wcl::RootSystem rs = wcl::RootSystem::build(type, rank);
  std::optional<wcl::ChevalleyBasis> basis;
  if (p > 0) basis.emplace(rs);
  Json arr = Json::array();
  std::string text;
  std::string tsv = "J\tdim_pu\tdim_p\tgamma_size\tgamma_roots\n";
  for (std::uint32_t jm = 0; jm < (1u << rank); ++jm) {
    auto pd = wcl::parabolic(rs, jm);
    auto gamma = wcl::centralizer_roots(pd, p, basis ? &*basis : nullptr);
    std::string label = wcl::j_label(rs, jm);
    std::string roots;
    int base = rs.first_positive();
    for (int loc : gamma.locals()) {
      if (!roots.empty()) roots += "+";
      roots += coeff_string(rs, base + loc);
    }
    if (format == "json") {
      Json j;
      j["J"] = label;
      j["dim_pu"] = pd.dim_pu;
      j["dim_p"] = pd.dim_p;
      j["gamma_size"] = gamma.size();
      Json gr = Json::array();
      for (int loc : gamma.locals()) gr.push_back(rs.root(base + loc).coeffs);
      j["gamma_roots"] = std::move(gr);
      arr.push_back(std::move(j));
    } else {
      text += label + ": dim P_u = " + std::to_string(pd.dim_pu) +
              ", dim P = " + std::to_string(pd.dim_p) +
              ", |Gamma| = " + std::to_string(gamma.size()) + "  " + roots + "\n";
      tsv += label + "\t" + std::to_string(pd.dim_pu) + "\t" + std::to_string(pd.dim_p) + "\t" +
             std::to_string(gamma.size()) + "\t" + roots + "\n";
    }
  }
  if (format == "json") {
    Json j;
    j["type"] = rs.name();
    j["p"] = p;
    j["parabolics"] = std::move(arr);
    out.write(j.dump(2) + "\n");
  } else if (format == "tsv") {
    out.write(tsv);
  } else {
    out.write(text);
  }
  return 0;
}

int cmd_lie(char type, int rank, int p, bool as_json, const Output& out) {
  wcl::RootSystem rs = wcl::RootSystem::build(type, rank);
  wcl::ChevalleyBasis basis(rs);
  Json arr = Json::array();
  std::string text;
  for (std::uint32_t jm = 0; jm < (1u << rank); ++jm) {
    auto pd = wcl::parabolic(rs, jm);
    auto gamma_p = wcl::centralizer_roots(pd, p, &basis);
    int lie_dim = basis.lie_centralizer_dim(pd.psi_pu.locals(), p);
    bool agree = lie_dim == pd.gamma_generic.size();
    if (as_json) {
      Json j;
      j["J"] = wcl::j_label(rs, jm);
      j["gamma_generic"] = pd.gamma_generic.size();
      j["gamma_mod_p"] = gamma_p.size();
      j["lie_centralizer_dim"] = lie_dim;
      j["agree"] = agree;
      arr.push_back(std::move(j));
    } else {
      text += wcl::j_label(rs, jm) + ": gamma_generic = " +
              std::to_string(pd.gamma_generic.size()) +
              ", gamma_mod_p = " + std::to_string(gamma_p.size()) +
              ", lie_centralizer_dim = " + std::to_string(lie_dim) +
              (agree ? "" : "  DEVIATION") + "\n";
    }
  }
  if (as_json) {
    Json j;
    j["type"] = rs.name();
    j["p"] = p;
    j["records"] = std::move(arr);
    out.write(j.dump(2) + "\n");
  } else {
    out.write(text);
  }
  return 0;
}

wcl::MatrixGroup build_kind(const std::string& kind, int q, int dim, long long cap) {
  if (kind == "SL") {
    if (dim == 0) throw CLI::ValidationError("--dim is required for kind SL");
    return wcl::MatrixGroup::build(wcl::GroupKind::SL, q, dim, cap);
  }
  if (kind == "SL2") return wcl::MatrixGroup::build(wcl::GroupKind::SL, q, 2, cap);
  if (kind == "SL3") return wcl::MatrixGroup::build(wcl::GroupKind::SL, q, 3, cap);
  if (kind == "SL4") return wcl::MatrixGroup::build(wcl::GroupKind::SL, q, 4, cap);
  if (kind == "Sp4") return wcl::MatrixGroup::build(wcl::GroupKind::Sp4, q, 0, cap);
  if (kind == "SU3") return wcl::MatrixGroup::build(wcl::GroupKind::SU3, q, 0, cap);
  throw CLI::ValidationError("unknown kind " + kind);
}

int cmd_finite_build(const std::string& kind, int q, int dim, long long cap, bool as_json,
                     const Output& out) {
  auto g = build_kind(kind, q, dim, cap);
  if (as_json) {
    Json j;
    j["name"] = g.name();
    j["order"] = g.size();
    j["u_order"] = g.u_set().size();
    j["torus_order"] = g.torus().size();
    j["borel_order"] = g.borel().size();
    j["center_order"] = g.center().size();
    j["center_of_u_order"] = g.center_of_u().size();
    out.write(j.dump(2) + "\n");
  } else {
    std::string s = g.name() + ": |G| = " + std::to_string(g.size()) +
                    ", |U| = " + std::to_string(g.u_set().size()) +
                    ", |T| = " + std::to_string(g.torus().size()) +
                    ", |B| = " + std::to_string(g.borel().size()) +
                    ", |Z(G)| = " + std::to_string(g.center().size()) +
                    ", |Z(U)| = " + std::to_string(g.center_of_u().size()) + "\n";
    out.write(s);
  }
  return 0;
}

int cmd_finite_enumerate(const std::string& kind, int q, int dim, long long cap, bool as_json,
                         const Output& out) {
  auto g = build_kind(kind, q, dim, cap);
  auto wc = wcl::enumerate_weakly_closed(g);
  std::vector<std::pair<std::uint32_t, wcl::SubgroupHandle>> radicals;
  if (g.root_system())
    for (std::uint32_t jm = 0; jm < (1u << g.root_system()->rank()); ++jm)
      radicals.emplace_back(jm, wcl::parabolic_radical(g, jm));
  Json arr = Json::array();
  std::string text = g.name() + ": " + std::to_string(wc.size()) + " weakly closed subgroups of U\n";
  for (const auto& h : wc) {
    std::string match;
    for (auto& [jm, r] : radicals)
      if (h == r) match = wcl::j_label(*g.root_system(), jm);
    Json j;
    j["order"] = h.order();
    Json gens = Json::array();
    for (int e : h.gens) gens.push_back(g.label(e));
    j["generators"] = std::move(gens);
    j["weakly_closed"] = true;
    if (match.empty())
      j["equals_radical_J"] = nullptr;
    else
      j["equals_radical_J"] = match;
    arr.push_back(std::move(j));
    text += "  order " + std::to_string(h.order()) +
            (match.empty() ? "  (not a parabolic radical)" : "  = P_u(J=" + match + ")") + "\n";
  }
  if (as_json) {
    Json j;
    j["group"] = g.name();
    j["weakly_closed"] = std::move(arr);
    out.write(j.dump(2) + "\n");
  } else {
    out.write(text);
  }
  return 0;
}

int cmd_finite_example1(const std::string& kind, long long cap, const Output& out) {
  if (kind != "SL3" && kind != "Sp4")
    throw CLI::ValidationError("example1 supports kinds SL3 and Sp4");
  auto g = build_kind(kind, 2, 0, cap);
  auto x = wcl::example_extra_subgroup(g);  // throws if not weakly closed / a radical
  out.write(g.name() + ": X = <u, Y> has order " + std::to_string(x.order()) +
            ", is weakly closed, and is not a parabolic radical\n");
  return 0;
}

int cmd_finite_mainthm(const std::string& kind, int q, int dim, long long cap, const Output& out) {
  auto g = build_kind(kind, q, dim, cap);
  if (!g.root_system()) throw CLI::ValidationError("verify-mainthm needs a split kind");
  auto wc = wcl::enumerate_weakly_closed(g);
  const auto& rs = *g.root_system();
  std::vector<wcl::SubgroupHandle> radicals;
  for (std::uint32_t jm = 0; jm < (1u << rs.rank()); ++jm)
    radicals.push_back(wcl::parabolic_radical(g, jm));
  bool exact = wc.size() == radicals.size();
  for (const auto& h : wc) {
    bool found = false;
    for (const auto& r : radicals)
      if (h == r) found = true;
    if (!found) exact = false;
  }
  out.write(g.name() + ": weakly closed subgroups = " + std::to_string(wc.size()) +
            ", parabolic radicals = " + std::to_string(radicals.size()) +
            (exact ? "  (classification exact)\n" : "  (extra subgroups present)\n"));
  return exact ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weakly closed unipotent subgroup verifier"};
  app.require_subcommand(1);

  std::string type_str = "A";
  int rank = 2, prime = 0, dim = 0, q = 2, threads = 0, max_rank = 8;
  long long cap = 1000000;
  bool as_json = false, as_tsv = false;
  std::string out_path;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_flag("--json", as_json, "emit JSON");
    cmd->add_option("--out", out_path, "write the report to a file");
  };

  auto* roots = app.add_subcommand("roots", "root system summary");
  roots->add_option("--type", type_str, "simple type A..G")->required();
  roots->add_option("--rank", rank, "rank")->required();
  add_output(roots);

  auto* parab = app.add_subcommand("parabolics", "per-J radical and centralizer root sets");
  parab->add_option("--type", type_str)->required();
  parab->add_option("--rank", rank)->required();
  parab->add_option("--p", prime, "prime characteristic for Gamma (default: generic)");
  parab->add_flag("--json", as_json, "emit JSON");
  parab->add_flag("--tsv", as_tsv, "emit TSV");
  parab->add_option("--out", out_path, "write the report to a file");

  auto* lie = app.add_subcommand("lie", "Lie centralizer dimensions mod p");
  lie->add_option("--type", type_str)->required();
  lie->add_option("--rank", rank)->required();
  lie->add_option("--p", prime, "prime")->required();
  add_output(lie);

  auto* finite = app.add_subcommand("finite", "finite matrix group suites");
  finite->require_subcommand(1);
  auto add_group_opts = [&](CLI::App* cmd, bool need_q) {
    auto* k = cmd->add_option("--kind", type_str, "SL|SL2|SL3|SL4|Sp4|SU3");
    k->required();
    if (need_q) cmd->add_option("--q", q, "field size (q0 for SU3)")->required();
    cmd->add_option("--dim", dim, "matrix dimension for kind SL");
    cmd->add_option("--cap", cap, "element cap");
  };
  auto* fbuild = finite->add_subcommand("build", "enumerate a group and print its orders table");
  add_group_opts(fbuild, true);
  fbuild->add_flag("--json", as_json, "emit JSON");
  fbuild->add_option("--out", out_path, "write the report to a file");
  auto* fenum = finite->add_subcommand("enumerate-wc", "list the weakly closed subgroups of U");
  add_group_opts(fenum, true);
  fenum->add_flag("--json", as_json, "emit JSON");
  fenum->add_option("--out", out_path, "write the report to a file");
  auto* fex1 = finite->add_subcommand("example1", "the rank-2 F_2 extra subgroup");
  fex1->add_option("--kind", type_str, "SL3|Sp4")->required();
  fex1->add_option("--cap", cap, "element cap");
  fex1->add_option("--out", out_path, "write the report to a file");
  auto* fmain = finite->add_subcommand("verify-mainthm", "weakly closed set vs parabolic radicals");
  add_group_opts(fmain, true);
  fmain->add_option("--out", out_path, "write the report to a file");

  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);
  auto* vall = verify->add_subcommand("all", "run every suite");
  vall->add_option("--max-rank", max_rank, "largest rank to sweep (default 8)");
  vall->add_option("--threads", threads, "worker threads (default: hardware)");
  vall->add_flag("--json", as_json, "emit JSON");
  vall->add_flag("--tsv", as_tsv, "emit TSV");
  vall->add_option("--out", out_path, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Output out{out_path};
  try {
    char type = type_str.empty() ? 'A' : type_str[0];
    if (roots->parsed()) return cmd_roots(type, rank, as_json, out);
    if (parab->parsed())
      return cmd_parabolics(type, rank, prime, as_json ? "json" : (as_tsv ? "tsv" : "text"), out);
    if (lie->parsed()) return cmd_lie(type, rank, prime, as_json, out);
    if (finite->parsed()) {
      if (fbuild->parsed()) return cmd_finite_build(type_str, q, dim, cap, as_json, out);
      if (fenum->parsed()) return cmd_finite_enumerate(type_str, q, dim, cap, as_json, out);
      if (fex1->parsed()) return cmd_finite_example1(type_str, cap, out);
      if (fmain->parsed()) return cmd_finite_mainthm(type_str, q, dim, cap, out);
    }
    if (vall->parsed()) {
      auto rep = wcl::run_all(max_rank, threads);
      if (as_json)
        out.write(rep.to_json().dump(2) + "\n");
      else if (as_tsv)
        out.write(rep.to_tsv());
      else
        out.write(rep.to_text());
      return rep.all_ok() ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
