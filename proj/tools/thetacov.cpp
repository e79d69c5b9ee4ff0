#include "thetacov/covers.hpp"
#include "thetacov/errors.hpp"
#include "thetacov/parity.hpp"
#include "thetacov/qseries.hpp"
#include "thetacov/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <sstream>
#include <string>

using json = nlohmann::ordered_json;
using namespace thetacov;

namespace {

Partition parse_profile(const std::string& s) {
  Partition p;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int v;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw InvalidRamification("profile part is not an integer: " + item);
    }
    if (pos != item.size() || v < 1)
      throw InvalidRamification("profile part is not a positive integer: " + item);
    p.push_back(v);
  }
  if (p.empty()) throw InvalidRamification("empty profile");
  std::sort(p.rbegin(), p.rend());
  if (!all_parts_odd(p)) throw InvalidRamification("profile has an even part");
  return p;
}

std::vector<Partition> parse_profiles(const std::vector<std::string>& raw) {
  std::vector<Partition> ps;
  for (const auto& s : raw) ps.push_back(parse_profile(s));
  return ps;
}

json profiles_json(const std::vector<Partition>& ps) {
  json a = json::array();
  for (const auto& mu : ps) a.push_back(mu);
  return a;
}

std::string partition_csv(const Partition& p) {
  if (p.empty()) return "-";
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(p[i]);
  }
  return s;
}

std::string profiles_csv(const std::vector<Partition>& ps) {
  std::string s;
  for (const auto& mu : ps) s += "(" + partition_csv(mu) + ")";
  return s.empty() ? "-" : s;
}

void emit_kv(const json& report, const std::string& format) {
  if (format == "json") {
    std::cout << report.dump() << "\n";
    return;
  }
  std::cout << "key,value\n";
  for (auto it = report.begin(); it != report.end(); ++it) {
    const json& v = it.value();
    if (v.is_object()) {
      for (auto jt = v.begin(); jt != v.end(); ++jt)
        std::cout << it.key() << "." << jt.key() << ","
                  << (jt.value().is_string() ? jt.value().get<std::string>()
                                             : jt.value().dump())
                  << "\n";
    } else if (v.is_array()) {
      std::cout << it.key() << "," << "\"" << v.dump() << "\"\n";
    } else if (v.is_string()) {
      std::cout << it.key() << "," << v.get<std::string>() << "\n";
    } else {
      std::cout << it.key() << "," << v.dump() << "\n";
    }
  }
}

int cmd_covers(int d, const std::vector<std::string>& raw_profiles,
               const std::string& format, int jobs) {
  RamificationData M(d, parse_profiles(raw_profiles));
  EnumOptions eo;
  eo.jobs = jobs;
  if (d > eo.max_d) throw ResourceLimit("degree exceeds the enumeration bound");
  if (static_cast<int>(M.profiles.size()) > eo.max_r)
    throw ResourceLimit("more branch points than the enumeration bound");

  long long tuples = 0;
  std::map<int, long long> comp_hist;
  std::map<int, long long> genus_hist;

  if (d == 0) {
    tuples = 1;
  } else {
    int r = static_cast<int>(M.profiles.size());
    std::vector<Partition> padded;
    for (const auto& mu : M.profiles) padded.push_back(pad_with_ones(mu, d));
    std::vector<std::vector<Perm>> cls;
    for (int i = 0; i + 1 < r; ++i)
      cls.push_back(permutations_of_type(d, padded[i]));
    Partition last = r > 0 ? padded[r - 1] : Partition{};
    std::vector<Perm> sd = all_permutations(d);
    long long n = static_cast<long long>(sd.size());

    struct Acc {
      long long tuples = 0;
      std::map<int, long long> comp, gen;
    };
    std::vector<Acc> parts(jobs > 0 ? jobs : 1);
    parallel_chunks(n, eo.jobs, [&](long long lo, long long hi, int tid) {
      Acc& acc = parts[tid];
      for (long long i = lo; i < hi; ++i) {
        for (const Perm& b : sd) {
          detail::visit_handle_tuples(sd[i], b, cls, last, r,
                                      [&](MonodromyTuple& t) {
            auto comps = components(t);
            ++acc.tuples;
            ++acc.comp[static_cast<int>(comps.size())];
            for (const auto& c : comps) ++acc.gen[c.genus];
          });
        }
      }
    });
    for (const auto& acc : parts) {
      tuples += acc.tuples;
      for (const auto& [k, v] : acc.comp) comp_hist[k] += v;
      for (const auto& [k, v] : acc.gen) genus_hist[k] += v;
    }
  }

  Rational m = Rational(static_cast<long>(tuples)) / Rational(factorial(d));
  m.canonicalize();

  json rep;
  rep["degree"] = d;
  rep["profiles"] = profiles_json(M.profiles);
  rep["tuples"] = tuples;
  rep["mass"] = rational_str(m);
  rep["burnside"] = rational_str(mass_via_burnside(M));
  json ch = json::object(), gh = json::object();
  for (const auto& [k, v] : comp_hist) ch[std::to_string(k)] = v;
  for (const auto& [k, v] : genus_hist) gh[std::to_string(k)] = v;
  rep["components_histogram"] = ch;
  rep["genus_histogram"] = gh;
  emit_kv(rep, format);
  return 0;
}

int cmd_parity(int d, const std::vector<std::string>& raw_profiles,
               const std::string& format, int jobs, bool details) {
  RamificationData M(d, parse_profiles(raw_profiles));
  EnumOptions eo;
  eo.jobs = jobs;
  ParityMasses pm = parity_masses(M, eo);

  json rep;
  rep["degree"] = d;
  rep["profiles"] = profiles_json(M.profiles);
  rep["tuples"] = pm.tuples;
  rep["signed_mass"] = rational_str(pm.signed_sum);
  rep["even"] = rational_str(pm.even);
  rep["odd"] = rational_str(pm.odd);

  if (details) {
    json covers = json::array();
    enumerate_tuples(M, [&](const MonodromyTuple& t) {
      json item;
      auto one_based = [](const Perm& g) {
        std::vector<int> v;
        for (int i = 0; i < g.deg(); ++i) v.push_back(g(i) + 1);
        return v;
      };
      item["a"] = one_based(t.a);
      item["b"] = one_based(t.b);
      json br = json::array();
      for (const auto& g : t.branch) br.push_back(one_based(g));
      item["branch"] = br;
      item["parity"] = parity_of_cover(t).parity;
      covers.push_back(std::move(item));
    }, eo);
    rep["covers"] = covers;
  }

  if (format == "csv" && details) {
    std::cout << "a,b,branch,parity\n";
    for (const auto& item : rep["covers"])
      std::cout << "\"" << item["a"].dump() << "\",\"" << item["b"].dump()
                << "\",\"" << item["branch"].dump() << "\","
                << item["parity"].dump() << "\n";
    return 0;
  }
  emit_kv(rep, format);
  return 0;
}

int cmd_characters(int d, const std::string& format) {
  if (d < 0 || d > 20) throw ResourceLimit("character table degree bound is 20");
  std::vector<Partition> mus;
  for (const auto& nu : odd_partitions_up_to(d))
    if (strip_ones(nu) == nu) mus.push_back(nu);

  json entries = json::array();
  for (const auto& lam : strict_partitions(d)) {
    for (const auto& mu : mus) {
      json e;
      e["lambda"] = lam;
      e["mu"] = mu;
      e["value"] = rational_str(central_character(mu, lam));
      entries.push_back(std::move(e));
    }
  }
  if (format == "csv") {
    std::cout << "lambda,mu,value\n";
    for (const auto& e : entries)
      std::cout << partition_csv(e["lambda"].get<Partition>()) << ","
                << partition_csv(e["mu"].get<Partition>()) << ","
                << e["value"].get<std::string>() << "\n";
    return 0;
  }
  json rep;
  rep["degree"] = d;
  rep["entries"] = entries;
  std::cout << rep.dump() << "\n";
  return 0;
}

int cmd_series(const std::vector<std::string>& raw_profiles, int N, int fit_w,
               const std::string& format) {
  std::vector<Partition> ps;
  {
    // reduce and validate without pinning a degree
    auto raw = parse_profiles(raw_profiles);
    for (auto& mu : raw) {
      Partition red = strip_ones(mu);
      if (!red.empty()) ps.push_back(red);
    }
  }
  if (N < 0 || N > 64) throw ResourceLimit("series truncation bound is 64");
  PowerSeries F = f_m_series(ps, N);

  json rep;
  rep["profiles"] = profiles_json(ps);
  rep["N"] = N;
  rep["euler_characteristic"] = euler_characteristic(ps);
  rep["weight"] = weight(ps);
  json coeffs = json::array();
  for (int n = 0; n <= N; ++n) coeffs.push_back(rational_str(F[n]));
  rep["coefficients"] = coeffs;

  if (fit_w >= 0) {
    QuasimodularForm qm = qm_fit(F, fit_w);
    json mono = json::object();
    for (const auto& [m, c] : qm.coeff)
      mono[QuasimodularForm::monomial_name(m)] = rational_str(c);
    json fit;
    fit["weight"] = qm.weight;
    fit["monomials"] = mono;
    rep["fit"] = fit;
  }

  if (format == "csv") {
    std::cout << "key,value\n";
    std::cout << "profiles," << profiles_csv(ps) << "\n";
    std::cout << "N," << N << "\n";
    std::cout << "euler_characteristic," << euler_characteristic(ps) << "\n";
    std::cout << "weight," << weight(ps) << "\n";
    for (int n = 0; n <= N; ++n)
      std::cout << "q^" << n << "," << rational_str(F[n]) << "\n";
    if (fit_w >= 0)
      for (auto it = rep["fit"]["monomials"].begin();
           it != rep["fit"]["monomials"].end(); ++it)
        std::cout << "fit." << it.key() << "," << it.value().get<std::string>()
                  << "\n";
    return 0;
  }
  std::cout << rep.dump() << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opt,
               const std::string& format) {
  auto checks = run_verify_suite(suite, opt);
  int failed = 0;
  json arr = json::array();
  for (const auto& c : checks) {
    if (!c.pass) ++failed;
    json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["detail"] = c.detail;
    arr.push_back(std::move(e));
  }
  if (format == "csv") {
    std::cout << "name,pass,detail\n";
    for (const auto& c : checks)
      std::cout << "\"" << c.name << "\"," << (c.pass ? "true" : "false")
                << ",\"" << c.detail << "\"\n";
  } else {
    json rep;
    rep["suite"] = suite;
    json o;
    o["dmax"] = opt.dmax;
    o["N"] = opt.N;
    o["seed"] = opt.seed;
    o["trials"] = opt.trials;
    rep["options"] = o;
    rep["checks"] = arr;
    rep["passed"] = static_cast<int>(checks.size()) - failed;
    rep["failed"] = failed;
    std::cout << rep.dump() << "\n";
  }
  return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact parity statistics of torus coverings with odd ramification"};
  app.require_subcommand(1);
  // let --format and --jobs sit on either side of the subcommand name
  app.fallthrough();

  std::string format = "json";
  int jobs = 1;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--jobs", jobs, "worker threads; output is identical for any value")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();

  int d = -1;
  std::vector<std::string> profs;
  int N = 30;
  int fit_w = -1;
  bool details = false;

  auto* covers = app.add_subcommand("covers", "enumerate monodromy tuples and masses");
  covers->add_option("--d", d, "degree of the covering")->required();
  covers->add_option("--profile", profs, "branch profile, comma separated odd parts; repeatable");

  auto* parity = app.add_subcommand("parity", "signed and per-parity masses");
  parity->add_option("--d", d, "degree of the covering")->required();
  parity->add_option("--profile", profs, "branch profile, comma separated odd parts; repeatable");
  parity->add_flag("--details", details, "emit per-tuple parities");

  auto* characters = app.add_subcommand("characters", "central character table");
  characters->add_option("--d", d, "size of the strict partitions")->required();

  auto* series = app.add_subcommand("series", "generating series and quasimodular fit");
  series->add_option("--profile", profs, "branch profile, comma separated odd parts; repeatable");
  series->add_option("--N", N, "truncation order")->capture_default_str();
  series->add_option("--fit", fit_w, "fit as a mixed-weight Eisenstein polynomial up to this weight");

  VerifyOptions vopt;
  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a consistency suite");
  verify->add_option("suite", suite, "one of: mass-agreement, lift-structure, burnside, oracle, euler, log-identity, arf-welldef")
      ->required();
  verify->add_option("--dmax", vopt.dmax, "degree sweep bound")->capture_default_str();
  verify->add_option("--N", vopt.N, "series truncation")->capture_default_str();
  verify->add_option("--seed", vopt.seed, "seed for the randomized properties")
      ->capture_default_str();
  verify->add_option("--trials", vopt.trials, "trials per randomized property")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (covers->parsed()) return cmd_covers(d, profs, format, jobs);
    if (parity->parsed()) return cmd_parity(d, profs, format, jobs, details);
    if (characters->parsed()) return cmd_characters(d, format);
    if (series->parsed()) return cmd_series(profs, N, fit_w, format);
    if (verify->parsed()) {
      vopt.jobs = jobs;
      return cmd_verify(suite, vopt, format);
    }
  } catch (const InvalidRamification& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  } catch (const ResourceLimit& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 3;
  } catch (const NotQuasimodular& e) {
    std::cerr << json{{"error", e.what()}, {"failing_index", e.index}}.dump()
              << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}
