#include "sympal/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>

#include <unistd.h>

#include "sympal/io.hpp"

namespace sympal::cli {

namespace {

using io::Json;

struct Options {
  std::string input;
  std::size_t cap = kDefaultCap;
  std::uint64_t seed = 0;
  bool json = false;
  // np-group
  unsigned n = 0;
  std::uint64_t q = 0, p = 0, ell = 0, q_max = 0;
  std::optional<std::int64_t> alpha;
  bool classify = false;
  std::optional<std::uint64_t> n1, n2;
  // regularity
  std::optional<std::int64_t> twist;
};

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

std::string hex(std::uint64_t v) {
  std::ostringstream ss;
  ss << std::hex << std::setw(16) << std::setfill('0') << v;
  return ss.str();
}

// Enumeration through SYMPAL_CACHE_DIR when set: files are named by the hash of
// the group document and written via rename, so readers never see partial files.
MatrixGroup with_enumeration(const MatrixGroup& g, std::size_t cap, std::ostream& err) {
  const char* dir = std::getenv("SYMPAL_CACHE_DIR");
  if (!dir || !*dir) return g;
  namespace fs = std::filesystem;
  const fs::path path = fs::path(dir) / (hex(fnv1a(io::to_json(g).dump())) + ".elems");
  if (auto set = ElementSet::load(path, g.field(), g.dim())) return g.with_cache(std::move(set));
  auto set = closure_enumerate(g, cap);
  std::error_code ec;
  fs::create_directories(dir, ec);
  const fs::path tmp = path.string() + ".tmp" + std::to_string(::getpid());
  try {
    set->save(tmp);
    fs::rename(tmp, path, ec);
  } catch (const std::exception& e) {
    err << "warning: enumeration cache not written: " << e.what() << '\n';
  }
  if (ec) fs::remove(tmp, ec);
  return g.with_cache(std::move(set));
}

int fail(std::ostream& err, const Error& e) {
  err << "error: " << e.what() << '\n';
  return exit_code(e.code());
}

int run_classify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto g = io::group_from_json(io::read_file(o.input));
  const auto verdict = classify(with_enumeration(g, o.cap, err), o.cap);
  if (o.json) {
    emit(out, io::to_json(verdict));
    return kOk;
  }
  out << "case: " << case_name(verdict) << '\n';
  if (auto* r = std::get_if<Reducible>(&verdict)) out << "invariant subspace dimension: " << r->witness.dim() << '\n';
  if (auto* i = std::get_if<Induced>(&verdict)) out << "blocks: h = " << i->h << ", m = " << i->m << '\n';
  if (auto* h = std::get_if<Huge>(&verdict))
    out << "subfield degree: " << h->subfield_degree << "\ntransvection subgroup order: " << h->transvection_subgroup_order
        << '\n';
  return kOk;
}

int run_np_group(const Options& o, std::ostream& out, std::ostream& err) {
  Json meta = Json::object();
  if (o.n1 || o.n2) {
    if (!o.n1 || !o.n2) throw Error(Errc::InvalidParams, "--n1 and --n2 go together");
    if (std::gcd(*o.n1, *o.n2) != 1) throw Error(Errc::InvalidParams, "gcd(N1, N2) must be 1");
    meta = {{"N1", *o.n1}, {"N2", *o.n2}, {"note", "recorded only; not used by the construction"}};
  }
  const auto params = make_np_params(o.n, o.q, o.p, o.ell);
  auto g = build_np_group(build_chi(params));
  if (o.alpha) g = twist_unramified(g, g.chi.field->from_int(*o.alpha));
  Json doc = io::to_json(g);
  if (!meta.empty()) doc["metadata"] = meta;
  int code = kOk;
  if (o.classify) {
    try {
      doc["classify"] = io::to_json(classify(g.group(), o.cap));
    } catch (const Error& e) {
      const bool expected = e.code() == Errc::NoTransvection;
      doc["classify"] = {{"error", std::string(errc_name(e.code()))}, {"expected", expected}};
      if (!expected) code = exit_code(e.code());
    }
  }
  if (!o.json) {
    out << "(n,p)-group n=" << params.n << " q=" << params.q << " p=" << params.p << " over F_" << params.ell << '^'
        << params.m << ", irreducibility " << doc["irreducibility"].get<std::string>() << '\n';
    if (o.classify) {
      const auto& c = doc["classify"];
      if (c.contains("case"))
        out << "classify: " << c["case"].get<std::string>() << '\n';
      else
        out << "classify: " << c["error"].get<std::string>()
            << (c["expected"].get<bool>() ? " (expected: the group contains no transvection)" : "") << '\n';
    }
  }
  emit(out, doc);
  (void)err;
  return code;
}

int run_find_primes(const Options& o, std::ostream& out) {
  const auto pairs = find_np_primes(o.n, o.q_max);
  if (o.json) {
    Json arr = Json::array();
    for (const auto& x : pairs) arr.push_back({{"q", x.q}, {"p", x.p}});
    emit(out, {{"n", o.n}, {"q_max", o.q_max}, {"pairs", std::move(arr)}});
    return kOk;
  }
  out << "q\tp\n";
  for (const auto& x : pairs) out << x.q << '\t' << x.p << '\n';
  return kOk;
}

int run_regularity(const Options& o, std::ostream& out) {
  auto profile = io::profile_from_json(io::read_file(o.input));
  if (o.twist) profile = twist_by_cyclotomic(profile, *o.twist);
  const auto res = check_npower_distinct(profile);
  if (o.json) {
    Json doc = {{"profile", io::to_json(profile)}, {"distinct", res.distinct()}};
    if (res.collision) doc["collision"] = io::to_json(*res.collision);
    emit(out, doc);
  } else if (res.distinct()) {
    out << "Distinct\n";
  } else {
    const auto& c = *res.collision;
    out << "Collision between characters " << c.first << " and " << c.second << " at niveau " << c.lifted_niveau
        << ": lifted exponents " << c.lifted_a.str() << " and " << c.lifted_b.str() << '\n';
  }
  return res.distinct() ? kOk : kCollision;
}

int run_mackey(const Options& o, std::ostream& out) {
  const auto doc = io::read_file(o.input);
  if (!doc.is_object() || !doc.contains("group")) throw Error(Errc::Parse, "mackey input needs \"group\"");
  const auto g = io::finite_group_from_json(doc.at("group"));
  SubgroupPtr normal;
  if (doc.contains("normal")) normal = io::subgroup_from_json(g, doc.at("normal"));
  std::optional<std::uint64_t> p;
  if (doc.contains("p")) {
    if (!doc.at("p").is_number_unsigned()) throw Error(Errc::Parse, "p must be a positive integer");
    p = doc.at("p").get<std::uint64_t>();
  }
  std::vector<std::string> sweeps = {"proposition", "restriction"};
  if (doc.contains("sweeps")) {
    try {
      sweeps = doc.at("sweeps").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::Parse, e.what());
    }
  }
  Json report = {{"group_order", g->order()}};
  std::size_t bad = 0;
  for (const auto& s : sweeps) {
    if (s == "proposition") {
      const auto r = sweep_prop_nh(g, normal, p);
      bad += r.counterexamples;
      report[s] = io::to_json(r);
    } else if (s == "restriction") {
      const auto r = sweep_res_nontrivial(g);
      bad += r.trivial;
      report[s] = io::to_json(r);
    } else if (s == "mackey") {
      const auto r = sweep_mackey_identity(g);
      bad += r.failures;
      report[s] = io::to_json(r);
    } else if (s == "frobenius") {
      const auto r = sweep_frobenius(g);
      bad += r.failures;
      report[s] = io::to_json(r);
    } else {
      throw Error(Errc::Parse, "unknown sweep \"" + s + "\"");
    }
  }
  if (o.json) {
    emit(out, report);
  } else {
    out << "group order " << g->order() << '\n';
    for (const auto& s : sweeps) out << s << ": " << report[s].dump() << '\n';
    out << (bad ? "COUNTEREXAMPLES FOUND: " + std::to_string(bad) : std::string("0 counterexamples")) << '\n';
  }
  return bad ? kCounterexample : kOk;
}

}  // namespace

int exit_code(Errc code) noexcept {
  switch (code) {
    case Errc::Parse:
      return kParse;
    case Errc::CapExceeded:
    case Errc::Unverified:
      return kCap;
    case Errc::WitnessCheckFailed:
      return kInternal;
    default:
      return kPrecondition;
  }
}

std::uint64_t fnv1a(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transvection subgroups of GSp, (n,p)-groups, inertia weights and Mackey sweeps", "sympal"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--cap", o.cap, "Element cap for enumeration")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "Seed for randomized steps");
    sub->add_flag("--json", o.json, "Structured output");
  };
  auto* cl = app.add_subcommand("classify", "Classify the group in a fixture file");
  cl->add_option("--input", o.input, "Group fixture")->required();
  common(cl);
  auto* np = app.add_subcommand("np-group", "Build the (n,p)-group");
  np->add_option("--n", o.n)->required();
  np->add_option("--q", o.q)->required();
  np->add_option("--p", o.p)->required();
  np->add_option("--ell", o.ell)->required();
  np->add_option("--alpha", o.alpha, "Unramified twist, as an integer in F_ell");
  np->add_option("--n1", o.n1, "Conductor part N1 (metadata)");
  np->add_option("--n2", o.n2, "Conductor part N2 (metadata)");
  np->add_flag("--classify", o.classify, "Also run the classifier on the result");
  common(np);
  auto* fp = app.add_subcommand("find-primes", "Search (q, p) pairs");
  fp->add_option("--n", o.n)->required();
  fp->add_option("--q-max", o.q_max)->required();
  common(fp);
  auto* rg = app.add_subcommand("regularity", "Check distinctness of n!-th powers of a weight profile");
  rg->add_option("--input", o.input, "Profile document")->required();
  rg->add_option("--twist", o.twist, "Cyclotomic twist exponent a");
  common(rg);
  auto* mk = app.add_subcommand("mackey", "Run character-theory sweeps on a finite group");
  mk->add_option("--input", o.input, "Sweep document")->required();
  common(mk);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (cl->parsed()) return run_classify(o, out, err);
    if (np->parsed()) return run_np_group(o, out, err);
    if (fp->parsed()) return run_find_primes(o, out);
    if (rg->parsed()) return run_regularity(o, out);
    return run_mackey(o, out);
  } catch (const Error& e) {
    return fail(err, e);
  }
}

}  // namespace sympal::cli
