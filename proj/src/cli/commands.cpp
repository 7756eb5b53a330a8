#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "specht/braids.hpp"
#include "specht/cli.hpp"

namespace specht {

namespace {

using json = nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json jint(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

IntVec parse_vector(const std::string& text, std::size_t dim) {
  std::istringstream in(text);
  IntVec v;
  std::string tok;
  while (in >> tok) {
    Int x;
    if (x.set_str(tok, 10) != 0) throw UsageError("not an integer: '" + tok + "'");
    v.push_back(x);
  }
  if (v.size() != dim)
    throw UsageError("vector has " + std::to_string(v.size()) + " entries, expected " + std::to_string(dim));
  return v;
}

json omega_json(const IntVec& w, int n) {
  json out = json::object();
  for (std::size_t k = 0; k < w.size(); ++k) {
    auto [i, j] = pair_at(n, k);
    out[std::to_string(i) + std::to_string(j)] = jint(w[k]);
  }
  return out;
}

std::size_t ambient_of(const std::string& target, int n) {
  return (target == "S1" || target == "IM_F1") ? static_cast<std::size_t>(n) : pair_count(n);
}

struct Options {
  int n = 0;
  std::string ring = "Z";
  std::string braid;
  std::vector<std::string> braids;
  std::vector<std::string> vectors;
  std::string subgroup;
  std::string target;
  std::string vector;
  std::string module;
  int degree = 0;
  std::string map;
  std::string scope;
  int n_max = 0;
  bool quiet = false;
  std::optional<std::string> cache;
};

CliResult winding(const Options& o) {
  BraidWord w = BraidWord::parse(o.braid, o.n);
  Permutation p = rho(w);
  if (!p.is_identity()) return {0, {{"pure", false}, {"permutation", p.images()}}};
  return {0, {{"pure", true}, {"omega", omega_json(winding_vector(w), o.n)}}};
}

CliResult membership_cmd(const Options& o) {
  if (!o.subgroup.empty() == !o.target.empty()) throw UsageError("give exactly one of --subgroup and --target");
  if (!o.subgroup.empty()) {
    if (o.braid.empty()) throw UsageError("--subgroup needs --braid");
    const auto& ids = specht_ids(o.n);
    if (std::find(ids.begin(), ids.end(), o.subgroup) == ids.end())
      throw UsageError("unknown subgroup '" + o.subgroup + "' for n = " + std::to_string(o.n));
    BraidWord w = BraidWord::parse(o.braid, o.n);
    IntVec omega = winding_vector(w);
    return {0, {{"subgroup", o.subgroup}, {"member", specht_membership(omega, o.subgroup, o.n)}, {"omega", omega_json(omega, o.n)}}};
  }
  if (o.vector.empty()) throw UsageError("--target needs --vector");
  RingSpec ring = RingSpec::parse(o.ring);
  IntVec v = parse_vector(o.vector, ambient_of(o.target, o.n));
  return {0, {{"target", o.target}, {"ring", ring.to_string()}, {"member", membership(v, o.target, o.n, ring)}}};
}

CliResult classify(const Options& o) {
  std::vector<IntVec> gens;
  for (const auto& b : o.braids) gens.push_back(winding_vector(BraidWord::parse(b, o.n)));
  for (const auto& v : o.vectors) gens.push_back(parse_vector(v, pair_count(o.n)));
  if (gens.empty()) throw UsageError("classify needs at least one --braid or --vector");
  return {0, {{"n", o.n}, {"label", classify_submodule(gens, o.n)}}};
}

CliResult cohomology_cmd(const Options& o) {
  RingSpec ring = RingSpec::parse(o.ring);
  return {0, cohomology_group(o.degree, make_module(o.module, o.n, ring)).to_json()};
}

CliResult splitting(const Options& o) {
  QuotientSpec q = QuotientSpec::make(o.n, RingSpec::parse(o.ring), o.map);
  SplittingResult r = splitting_check(q);
  json body = r.to_json();
  body["quotient"] = q.to_string();
  bool verified = r.splits && verify_splitting_witness(q, *r.witness);
  body["witness_verified"] = r.splits ? json(verified) : json(nullptr);
  return {r.splits && !verified ? 1 : 0, body};
}

CliResult image_index(const Options& o) {
  static const std::map<std::string, std::pair<std::string, std::string>> maps = {
      {"f0", {"IM_F0", "S0"}}, {"f1", {"IM_F1", "S1"}}, {"f2", {"IM_F2", "S2"}}};
  auto it = maps.find(o.map);
  if (it == maps.end()) throw UsageError("image-index takes --map f0, f1 or f2");
  const auto& [sub, sup] = it->second;
  Index i = lattice_index(make_module(sub, o.n, RingSpec::Z())->lattice(), make_module(sup, o.n, RingSpec::Z())->lattice());
  return {0, {{"n", o.n}, {"map", o.map}, {"sub", sub}, {"sup", sup}, {"index", i.infinite ? json("infinite") : jint(i.value)}}};
}

CliResult verify(const Options& o) {
  SuiteOptions s;
  int cap = o.scope == "paper-full" ? 6 : 5;
  s.n_max = o.n_max ? o.n_max : cap;
  if (s.n_max < 3 || s.n_max > cap)
    throw UsageError("--n-max for " + o.scope + " must lie in 3.." + std::to_string(cap));
  s.optional_n6 = o.scope == "paper-full";
  if (!o.quiet)
    s.on_criterion = [](int c, const std::vector<Check>& checks) {
      std::size_t fail = 0;
      for (const auto& k : checks) fail += k.status == "FAIL";
      std::clog << "[verify] criterion " << c << ": " << checks.size() << " checks, " << fail << " failed\n";
    };
  auto checks = verification_suite(s);
  json report = suite_report(o.scope, s, checks);
  return {report.at("all_pass").get<bool>() ? 0 : 1, report};
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Exact computations with Specht modules, braid quotients and their cohomology", "specht-lab"};
  app.require_subcommand(1, 1);
  app.add_option("--cache", o.cache, "kernel cache directory (default: $SPECHT_LAB_CACHE or .specht-cache)");

  auto ring_check = CLI::Validator(
      [](std::string& s) -> std::string {
        try {
          RingSpec::parse(s);
        } catch (const std::exception& e) {
          return e.what();
        }
        return {};
      },
      "Z|Zmod:m");
  auto n_opt = [&](CLI::App* sub) { sub->add_option("--n", o.n, "number of strands")->required()->check(CLI::Range(2, 8)); };

  auto* wind = app.add_subcommand("winding", "winding numbers of a pure braid");
  n_opt(wind);
  wind->add_option("--braid", o.braid, "signed generator indices, e.g. \"1 2 -1\"")->required();

  auto* mem = app.add_subcommand("membership", "Specht subgroup or submodule membership");
  n_opt(mem);
  mem->add_option("--subgroup", o.subgroup, "N0, N1, N2, N01, N02 or N12");
  mem->add_option("--braid", o.braid, "pure braid tested against --subgroup");
  mem->add_option("--target", o.target, "S1, S2, K12, IM_F1, IM_F2 or M2_EQUIV")
      ->check(CLI::IsMember({"S1", "S2", "K12", "IM_F1", "IM_F2", "M2_EQUIV"}));
  mem->add_option("--vector", o.vector, "ambient coordinates tested against --target");
  mem->add_option("--ring", o.ring, "Z or Zmod:m")->check(ring_check);

  auto* cls = app.add_subcommand("classify", "Specht subgroup type of the span of pure braids or M2 vectors");
  n_opt(cls);
  cls->add_option("--braid", o.braids, "pure braid (repeatable)");
  cls->add_option("--vector", o.vectors, "M2 coordinates (repeatable)");

  auto* coh = app.add_subcommand("cohomology", "H^k of S_n with coefficients in a module");
  n_opt(coh);
  coh->add_option("--module", o.module, "S0, M1, M2, S1, S2, K12, IM_F*, M2_EQUIV")->required();
  coh->add_option("--ring", o.ring, "Z or Zmod:m")->check(ring_check);
  coh->add_option("--degree", o.degree, "0, 1 or 2")->required()->check(CLI::Range(0, 2));

  auto* spl = app.add_subcommand("splitting", "does B_n / ker(h o pi) split over S_n");
  n_opt(spl);
  spl->add_option("--map", o.map, "pi:m, f0, f1, f2, f01, f02 or f12")->required();
  spl->add_option("--ring", o.ring, "Z or Zmod:m")->check(ring_check);

  auto* idx = app.add_subcommand("image-index", "index of the f-image in the Specht lattice");
  n_opt(idx);
  idx->add_option("--map", o.map, "f0, f1 or f2")->required();

  auto* ver = app.add_subcommand("verify", "run the verification suite");
  ver->add_option("--scope", o.scope, "paper-small or paper-full")->required()->check(CLI::IsMember({"paper-small", "paper-full"}));
  ver->add_option("--n-max", o.n_max, "largest n to check");
  ver->add_flag("--quiet", o.quiet, "no progress on stderr");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    std::cerr << app.help();
    return {0, json::object()};
  } catch (const CLI::CallForAllHelp&) {
    std::cerr << app.help("", CLI::AppFormatMode::All);
    return {0, json::object()};
  } catch (const CLI::ParseError& e) {
    return {2, {{"error", e.what()}}};
  }

  try {
    if (o.cache) set_cache_dir(*o.cache);
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "winding") return winding(o);
    if (name == "membership") return membership_cmd(o);
    if (name == "classify") return classify(o);
    if (name == "cohomology") return cohomology_cmd(o);
    if (name == "splitting") return splitting(o);
    if (name == "image-index") return image_index(o);
    return verify(o);
  } catch (const NotPure& e) {
    return {2, {{"error", "braid is not pure"}, {"permutation", e.perm.images()}}};
  } catch (const std::exception& e) {
    return {2, {{"error", e.what()}}};
  }
}

}  // namespace specht
