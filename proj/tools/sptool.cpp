// sptool: recognition, exact counts and bounds, table reproduction,
// sampling and Monte Carlo estimation for single-peaked elections.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sp/configurations.hpp"
#include "sp/core.hpp"
#include "sp/counting.hpp"
#include "sp/estimate.hpp"
#include "sp/io.hpp"
#include "sp/recognition.hpp"
#include "sp/sampling.hpp"

namespace {

using nlohmann::json;

std::string vote_str(const sp::Vote& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

std::string g12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string decimal(const sp::Rational& r) {
  return sp::format_sci(sp::to_sci(r), 6);
}

json params_json(const sp::ModelSpec& spec) {
  json p = json::object();
  if (spec.model == sp::Model::polya)
    p["a"] = spec.contagion.str();
  else if (spec.model == sp::Model::mallows)
    p["phi"] = g12(spec.phi.convert_to<double>());
  return p;
}

int cmd_recognize(const std::string& path, bool explain) {
  const sp::Election e = sp::read_election_file(path);
  if (auto axis = sp::recognize_fast(e)) {
    std::cout << "single-peaked: yes\naxis:";
    for (int c : *axis) std::cout << ' ' << c;
    std::cout << '\n';
    return 0;
  }
  std::cout << "single-peaked: no\n";
  if (explain) {
    for (const sp::Configuration& cfg : sp::sp_forbidden_set()) {
      auto w = sp::contains_configuration(e, cfg);
      if (!w) continue;
      std::cout << "contains the (" << cfg.l() << "," << cfg.k
                << ")-configuration:\n";
      for (const sp::Vote& row : cfg.orders)
        std::cout << "  " << vote_str(row) << '\n';
      std::cout << "rows map to votes (1-based):";
      for (int r : w->vote_of_row) std::cout << ' ' << r + 1;
      std::cout << "\nitems map to candidates:";
      for (int c : w->item_to_candidate) std::cout << ' ' << c;
      std::cout << '\n';
      break;
    }
  }
  return 0;
}

int cmd_count(const std::string& model, int n, int m) {
  if (model == "ic") {
    const sp::BigInt cnt = sp::sp_count_exact(n, m);
    sp::BigInt total = 1;
    for (int i = 0; i < n; ++i) total *= sp::factorial(m);
    const sp::Rational p{cnt, total};
    std::cout << "single-peaked elections: " << cnt << "\n"
              << "all elections: " << total << "\n"
              << "probability: " << p << " = " << decimal(p) << '\n';
    return 0;
  }
  if (model == "iac") {
    const sp::Rational p = sp::iac_exact(n, m);
    std::cout << "probability: " << p << " = " << decimal(p) << '\n';
    return 0;
  }
  throw std::invalid_argument("count supports models ic and iac");
}

void print_bound(const char* label, const sp::Rational& r) {
  std::cout << label << ": " << r << " = " << decimal(r) << '\n';
}

int cmd_bound(const std::string& model, int n, int m, const std::string& a,
              const std::string& phi, bool as_json) {
  sp::BoundResult b;
  json params = json::object();
  if (model == "ic") {
    b = sp::ic_probability_bounds(n, m);
  } else if (model == "iac") {
    b = sp::iac_bounds(n, m);
  } else if (model == "polya") {
    if (a.empty()) throw std::invalid_argument("polya bound requires --a");
    b.lower = sp::polya_lower(n, m, sp::BigInt(a));
    b.formula = "polya_lower";
    params["a"] = a;
  } else if (model == "mallows") {
    if (phi.empty()) throw std::invalid_argument("mallows bound requires --phi");
    b.lower = sp::mallows_lower(n, m, sp::rational_from_decimal(phi));
    b.formula = "mallows_lower";
    params["phi"] = phi;
  } else {
    throw std::invalid_argument("unknown model: " + model);
  }

  if (as_json) {
    json rec{{"model", model}, {"n", n}, {"m", m}, {"params", params}};
    rec["lower"] = b.lower ? json(g12(sp::to_sci(*b.lower).as_double())) : json();
    rec["upper"] = b.upper ? json(g12(sp::to_sci(*b.upper).as_double())) : json();
    rec["exact"] = b.exact ? json(g12(sp::to_sci(*b.exact).as_double())) : json();
    std::cout << rec.dump() << '\n';
    return 0;
  }
  if (b.exact) print_bound("exact", *b.exact);
  if (b.lower) print_bound("lower", *b.lower);
  if (b.upper) print_bound("upper", *b.upper);
  return 0;
}

std::string cell(const sp::Rational& r) { return sp::format_probability(r); }

const std::vector<std::pair<int, int>> kUrnRows = {
    {10, 5}, {25, 5}, {50, 5}, {10, 10}, {25, 10}, {50, 10}};

int cmd_tables(const std::string& which) {
  if (which == "ic") {
    std::cout << "(n,m) exact probability\n";
    for (int m : {3, 4})
      for (int n : {2, 5, 10, 25, 50}) {
        sp::BigInt total = 1;
        for (int i = 0; i < n; ++i) total *= sp::factorial(m);
        std::cout << "(" << n << "," << m << ") "
                  << cell(sp::Rational(sp::sp_count_exact(n, m), total)) << '\n';
      }
    std::cout << "(n,m) lower upper\n";
    for (int m : {5, 10})
      for (int n : {2, 5, 10, 25, 50}) {
        const auto b = sp::ic_probability_bounds(n, m);
        std::cout << "(" << n << "," << m << ") ";
        if (b.exact)
          std::cout << cell(*b.exact) << '\n';
        else
          std::cout << cell(*b.lower) << ' ' << cell(*b.upper) << '\n';
      }
    return 0;
  }
  if (which == "iac") {
    std::cout << "(n,m) lower upper\n";
    for (int m : {3, 4, 5, 10})
      for (int n : {2, 5, 10, 25, 50}) {
        const auto b = sp::iac_bounds(n, m);
        std::cout << "(" << n << "," << m << ") ";
        if (b.exact)
          std::cout << cell(*b.exact) << '\n';
        else
          std::cout << cell(*b.lower) << ' ' << cell(*b.upper) << '\n';
      }
    return 0;
  }
  if (which == "polya") {
    std::cout << "(n,m) a=10 a=m!/2 a=m!\n";
    for (auto [n, m] : kUrnRows) {
      const sp::BigInt mf = sp::factorial(m);
      std::cout << "(" << n << "," << m << ")";
      for (const sp::BigInt& a : {sp::BigInt(10), sp::BigInt(mf / 2), mf})
        std::cout << ' ' << cell(sp::polya_lower(n, m, a));
      std::cout << '\n';
    }
    return 0;
  }
  if (which == "mallows") {
    std::cout << "(n,m) phi=0.3 phi=0.2 phi=0.1 phi=0.05 phi=0.01\n";
    for (auto [n, m] : kUrnRows) {
      std::cout << "(" << n << "," << m << ")";
      for (const char* phi : {"0.3", "0.2", "0.1", "0.05", "0.01"})
        std::cout << ' '
                  << cell(sp::mallows_lower(n, m, sp::rational_from_decimal(phi)));
      std::cout << '\n';
    }
    return 0;
  }
  throw std::invalid_argument("tables expects one of: ic iac polya mallows");
}

int cmd_sample(const sp::ModelSpec& spec, int n, int m, int count,
               std::uint64_t seed, const std::string& out_path) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw std::invalid_argument("cannot open " + out_path);
    out = &file;
  }
  for (int i = 0; i < count; ++i) {
    sp::RngStream rng(seed, (std::uint64_t)i);
    *out << "# election " << i + 1 << " of " << count << " (model "
         << spec.name() << ", seed " << seed << ")\n";
    sp::write_election(*out, sp::sample_election(spec, n, m, rng));
  }
  return 0;
}

int cmd_estimate(const sp::ModelSpec& spec, int n, int m,
                 std::uint64_t trials, std::uint64_t seed, unsigned workers,
                 bool as_json) {
  const sp::EstimateResult r =
      sp::estimate_sp_probability(spec, n, m, trials, seed, workers);
  if (as_json) {
    json rec{{"model", spec.name()},
             {"n", n},
             {"m", m},
             {"params", params_json(spec)},
             {"trials", r.trials},
             {"successes", r.successes},
             {"estimate", g12(r.estimate)},
             {"ci_low", g12(r.ci_low)},
             {"ci_high", g12(r.ci_high)},
             {"seed", seed}};
    std::cout << rec.dump() << '\n';
  } else {
    std::cout << "trials: " << r.trials << "\nsuccesses: " << r.successes
              << "\nestimate: " << g12(r.estimate) << "\n95% ci: ["
              << g12(r.ci_low) << ", " << g12(r.ci_high) << "]\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"single-peaked election toolkit"};
  app.require_subcommand(1);

  std::string file, model = "ic", a, phi, which, out_path;
  int n = 0, m = 0, count = 1;
  std::uint64_t trials = 0, seed = 0;
  unsigned workers = 1;
  bool explain = false, as_json = false;

  auto* rec = app.add_subcommand("recognize", "decide single-peakedness");
  rec->add_option("file", file, "election file")->required();
  rec->add_flag("--explain", explain, "on failure, show a forbidden configuration");

  auto* cnt = app.add_subcommand("count", "exact counts and probabilities");
  cnt->add_option("--model", model, "ic or iac")->required();
  cnt->add_option("--n", n, "number of votes")->required();
  cnt->add_option("--m", m, "number of candidates")->required();

  auto* bnd = app.add_subcommand("bound", "probability bounds");
  bnd->add_option("--model", model, "ic, iac, polya or mallows")->required();
  bnd->add_option("--n", n)->required();
  bnd->add_option("--m", m)->required();
  bnd->add_option("--a", a, "urn homogeneity");
  bnd->add_option("--phi", phi, "dispersion");
  bnd->add_flag("--json", as_json);

  auto* tab = app.add_subcommand("tables", "reproduce the numeric tables");
  tab->add_option("which", which, "ic, iac, polya or mallows")->required();

  auto* smp = app.add_subcommand("sample", "draw elections from a model");
  smp->add_option("--model", model)->required();
  smp->add_option("--n", n)->required();
  smp->add_option("--m", m)->required();
  smp->add_option("--count", count);
  smp->add_option("--seed", seed)->required();
  smp->add_option("--a", a);
  smp->add_option("--phi", phi);
  smp->add_option("--out", out_path, "output file (default stdout)");

  auto* est = app.add_subcommand("estimate", "Monte Carlo probability estimate");
  est->add_option("--model", model)->required();
  est->add_option("--n", n)->required();
  est->add_option("--m", m)->required();
  est->add_option("--trials", trials)->required();
  est->add_option("--seed", seed)->required();
  est->add_option("--workers", workers);
  est->add_option("--a", a);
  est->add_option("--phi", phi);
  est->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (rec->parsed()) return cmd_recognize(file, explain);
    if (cnt->parsed()) return cmd_count(model, n, m);
    if (bnd->parsed()) return cmd_bound(model, n, m, a, phi, as_json);
    if (tab->parsed()) return cmd_tables(which);
    const std::string param = !a.empty() ? a : phi;
    const sp::ModelSpec spec = sp::parse_model(model, param);
    if (smp->parsed()) return cmd_sample(spec, n, m, count, seed, out_path);
    if (est->parsed())
      return cmd_estimate(spec, n, m, trials, seed, workers, as_json);
  } catch (const sp::capability_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
