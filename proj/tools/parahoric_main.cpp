#include "parahoric/figure.hpp"
#include "parahoric/io.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace {

using namespace parahoric;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBounds = 3;

struct RunConfig {
  std::string group = "gl";
  int n = 0;
  int d = 1;
  std::vector<int> qs;
  long long p = 2;
  int r = 1;
  std::string format;
  std::string out;
  bool dump = false;
};

DatumPtr make_datum(const RunConfig& cfg) {
  Family fam = cfg.group == "gl" ? Family::GL : Family::GSp;
  return build_group_datum(fam, cfg.n);
}

Coweight shimura_mu(const DatumPtr& dat, const RunConfig& cfg) {
  Coweight mu(dat->N, 0);
  if (dat->family == Family::GL) {
    if (cfg.d < 1 || cfg.d >= dat->n)
      throw CLI::ValidationError("--d", "requires 0 < d < n for GL");
    for (int i = dat->N - cfg.d; i < dat->N; ++i) mu[i] = -1;
  } else {
    for (int i = dat->n; i < dat->N; ++i) mu[i] = -1;
  }
  return mu;
}

void emit(const RunConfig& cfg, const std::string& payload) {
  if (cfg.out.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + cfg.out);
  f << payload;
}

bool prime_ok(long long p) {
  if (p < 2) return false;
  for (long long f = 2; f * f <= p; ++f)
    if (p % f == 0) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of parahoric local models for GL_n and GSp_2n"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--group", cfg.group, "group family")
      ->check(CLI::IsMember({"gl", "gsp"}))
      ->required();
  app.add_option("--n", cfg.n, "rank parameter (ambient n for gl, half-rank for gsp)")
      ->required();
  app.add_option("--d", cfg.d, "corank parameter (gl only)");
  app.add_option("--q", cfg.qs, "finite field size, repeatable")->expected(-1);
  app.add_option("--p", cfg.p, "residue prime for specializations");
  app.add_option("--r", cfg.r, "power of the residue field");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "tsv", "svg"}));
  app.add_option("--out", cfg.out, "output path (default stdout)");
  app.add_flag("--dump", cfg.dump, "dump chain points (latcount)");

  auto* cmd_adm = app.add_subcommand("adm", "admissible set and strata");
  auto* cmd_perm = app.add_subcommand("perm", "permissible set and strata");
  auto* cmd_verify = app.add_subcommand("verify", "check Perm(mu) = Adm(mu)");
  auto* cmd_strata = app.add_subcommand("strata", "stratification report");
  auto* cmd_codim1 = app.add_subcommand("codim1", "codimension-1 incidence");
  auto* cmd_hecke = app.add_subcommand("hecke", "central element and test function");
  auto* cmd_trace = app.add_subcommand("trace", "R-polynomial trace table");
  auto* cmd_newton = app.add_subcommand("newton", "Newton points and B(G, mu)");
  auto* cmd_mazur = app.add_subcommand("mazur", "Mazur inequality over Adm(mu)");
  auto* cmd_latcount = app.add_subcommand("latcount", "finite-field strata counts");
  auto* cmd_figure = app.add_subcommand("figure", "SVG alcove figure (rank 2)");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    DatumPtr dat = make_datum(cfg);
    Coweight mu = shimura_mu(dat, cfg);
    int exit_code = kExitOk;

    if (cmd_adm->parsed() || cmd_perm->parsed() || cmd_verify->parsed() ||
        cmd_strata->parsed()) {
      OrderedJson j = stratify_to_json(dat, mu);
      if (j["minuscule"].get<bool>() && !j["equal"].get<bool>())
        exit_code = kExitViolation;
      emit(cfg, j.dump(2));
    } else if (cmd_codim1->parsed()) {
      auto inc = codim1_incidence(dat, mu);
      OrderedJson j;
      j["mu"] = mu;
      OrderedJson items = OrderedJson::array();
      bool ok = true;
      for (const auto& [x, above] : inc) {
        OrderedJson ji;
        ji["w"] = to_text(x);
        OrderedJson ja = OrderedJson::array();
        for (const auto& t : above) ja.push_back(to_text(t));
        ji["translations_above"] = ja;
        if (above.size() != 2) ok = false;
        items.push_back(std::move(ji));
      }
      j["codim1"] = items;
      j["each_below_exactly_two"] = ok;
      if (!ok) exit_code = kExitViolation;
      emit(cfg, j.dump(2));
    } else if (cmd_hecke->parsed()) {
      if (!prime_ok(cfg.p)) throw CLI::ValidationError("--p", "must be prime");
      if (cfg.format == "json") {
        OrderedJson j = hecke_elt_to_json(bernstein_z(dat, mu));
        emit(cfg, j.dump(2));
      } else {
        emit(cfg, test_function_tsv(dat, mu, cfg.p, cfg.r));
      }
    } else if (cmd_trace->parsed()) {
      if (!prime_ok(cfg.p)) throw CLI::ValidationError("--p", "must be prime");
      emit(cfg, trace_table_tsv(dat, mu, cfg.p, cfg.r));
    } else if (cmd_newton->parsed() || cmd_mazur->parsed()) {
      OrderedJson j = newton_to_json(dat, mu);
      if (!j["mazur_ok"].get<bool>()) exit_code = kExitViolation;
      emit(cfg, j.dump(2));
    } else if (cmd_latcount->parsed()) {
      std::vector<int> qs = cfg.qs.empty() ? std::vector<int>{2} : cfg.qs;
      // The per-q sweeps run concurrently; assembly stays ordered.
      std::vector<std::string> sections(qs.size());
      std::vector<bool> ok(qs.size(), true);
      std::vector<std::thread> pool;
      std::exception_ptr err;
      std::mutex err_mu;
      for (size_t i = 0; i < qs.size(); ++i) {
        pool.emplace_back([&, i]() {
          try {
            if (cfg.dump) {
              sections[i] = dump_points_text(dat, mu, qs[i]);
              return;
            }
            auto rep = strata_point_counts(dat, mu, qs[i]);
            sections[i] = "# q = " + std::to_string(qs[i]) + "\n" +
                          strata_counts_tsv(rep);
            ok[i] = rep.index_set_matches_adm && rep.counts_match_cells;
          } catch (...) {
            std::lock_guard<std::mutex> lock(err_mu);
            if (!err) err = std::current_exception();
          }
        });
      }
      for (auto& th : pool) th.join();
      if (err) std::rethrow_exception(err);
      std::ostringstream os;
      for (size_t i = 0; i < qs.size(); ++i) {
        os << sections[i];
        if (!ok[i]) exit_code = kExitViolation;
      }
      emit(cfg, os.str());
    } else if (cmd_figure->parsed()) {
      emit(cfg, alcove_figure_svg(dat, mu));
    }
    return exit_code;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    std::cerr << "error: " << msg << "\n";
    if (msg.find("bounded") != std::string::npos ||
        msg.find("limited") != std::string::npos)
      return kExitBounds;
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  }
}
