#include "wdeg/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <utility>

#include "wdeg/automorph.hpp"
#include "wdeg/campaign.hpp"
#include "wdeg/errors.hpp"
#include "wdeg/groebner.hpp"
#include "wdeg/ineq.hpp"
#include "wdeg/parser.hpp"
#include "wdeg/report.hpp"
#include "wdeg/upoly.hpp"

namespace wdeg {

namespace {

struct Options {
  std::vector<std::string> f;
  std::string phi;
  std::string g;
  std::string w;
  std::string w_lex;
  std::vector<std::string> inverse;
  std::vector<std::string> images;
  std::optional<std::size_t> n;
  std::string suite;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t jobs = 0;
  std::optional<std::uint32_t> deg_bound;
  std::string out_file;
  std::optional<std::uint64_t> max_steps;
};

GroebnerOptions groebner_options(const Options& o) {
  GroebnerOptions g;
  if (o.max_steps) g.max_steps = *o.max_steps;
  return g;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, sep)) parts.push_back(part);
  return parts;
}

std::int64_t parse_int(const std::string& text) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw InputError("not an integer: '" + text + "'");
  }
  while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
  if (used != text.size()) throw InputError("not an integer: '" + text + "'");
  return v;
}

WeightVector parse_weights(const Options& o) {
  if (!o.w.empty() && !o.w_lex.empty()) throw InputError("give --w or --w-lex, not both");
  if (!o.w_lex.empty()) {
    std::vector<Gamma> ws;
    for (const std::string& tuple : split(o.w_lex, ';')) {
      std::vector<std::int64_t> values;
      for (const std::string& v : split(tuple, ',')) values.push_back(parse_int(v));
      if (values.empty() || values.size() > Gamma::kMaxLevels) {
        throw InputError("each --w-lex tuple needs 1.." + std::to_string(Gamma::kMaxLevels) +
                         " entries");
      }
      ws.emplace_back(std::span<const std::int64_t>(values));
    }
    return WeightVector(std::move(ws));
  }
  if (o.w.empty()) throw InputError("a weight vector (--w or --w-lex) is required");
  std::vector<std::int64_t> values;
  for (const std::string& v : split(o.w, ',')) values.push_back(parse_int(v));
  return WeightVector::from_integers(values);
}

// Largest index of x<k> in the texts, for commands without a weight vector.
std::size_t infer_nvars(const std::vector<std::string>& texts) {
  static const std::regex var(R"(x(\d+))");
  std::size_t n = 0;
  for (const std::string& t : texts) {
    for (auto it = std::sregex_iterator(t.begin(), t.end(), var); it != std::sregex_iterator(); ++it) {
      n = std::max<std::size_t>(n, std::stoul((*it)[1].str()));
    }
  }
  return n;
}

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, std::size_t n) {
  std::vector<Polynomial> out;
  for (const std::string& t : texts) out.push_back(parse_polynomial(t, n));
  return out;
}

const std::string& require(const std::string& value, const char* flag) {
  if (value.empty()) throw InputError(std::string(flag) + " is required");
  return value;
}

std::vector<std::string> y_names(std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("y" + std::to_string(i + 1));
  return names;
}

Json weights_json(const WeightVector& w) {
  Json out = Json::array();
  for (const Gamma& g : w.weights()) out.push_back(to_json(g));
  return out;
}

struct Outcome {
  Json report;
  bool verdict = true;
};

Outcome cmd_degree(const Options& o) {
  const WeightVector w = parse_weights(o);
  if (o.f.size() != 1) throw InputError("degree takes exactly one --f");
  const Polynomial f = parse_polynomial(o.f[0], w.size());
  Json r;
  r["f"] = f.str();
  r["w"] = weights_json(w);
  r["degree"] = to_json(weighted_degree(f, w));
  return {r, true};
}

Outcome cmd_initial(const Options& o) {
  const WeightVector w = parse_weights(o);
  if (o.f.size() != 1) throw InputError("initial takes exactly one --f");
  const Polynomial f = parse_polynomial(o.f[0], w.size());
  Json r;
  r["f"] = f.str();
  r["w"] = weights_json(w);
  r["initial"] = initial_form(f, w).str();
  r["degree"] = to_json(weighted_degree(f, w));
  return {r, true};
}

Outcome cmd_minv(const Options& o) {
  const WeightVector w = parse_weights(o);
  const UPoly phi = parse_upoly(require(o.phi, "--phi"), w.size());
  const Polynomial g = parse_polynomial(require(o.g, "--g"), w.size());
  if (phi.is_zero()) throw InputError("Phi must be nonzero");
  if (g.is_zero()) throw InputError("g must be nonzero");
  const std::uint32_t by_def = m_wg(phi, g, w, MMethod::kByDefinition);
  const std::uint32_t by_init = m_wg(phi, g, w, MMethod::kByInitial);
  Json r;
  r["phi"] = phi.str();
  r["g"] = g.str();
  r["w"] = weights_json(w);
  r["deg_wg_phi"] = to_json(deg_wg(phi, g, w));
  r["deg_phi_of_g"] = to_json(weighted_degree(apply(phi, g), w));
  r["m_by_definition"] = by_def;
  r["m_by_initial"] = by_init;
  r["agree"] = by_def == by_init;
  return {r, by_def == by_init};
}

Outcome cmd_check(const std::string& which, const Options& o) {
  const WeightVector w = parse_weights(o);
  const std::size_t n = w.size();
  const std::vector<Polynomial> fs = parse_all(o.f, n);
  Json input;
  input["f"] = Json::array();
  for (const Polynomial& f : fs) input["f"].push_back(f.str());
  input["w"] = weights_json(w);

  if (which == "t43") {
    std::optional<std::vector<Polynomial>> inv;
    if (!o.inverse.empty()) inv = parse_all(o.inverse, n);
    const IneqReport rep = check_automorphism_bound(
        fs, w, inv ? std::optional<std::span<const Polynomial>>(*inv) : std::nullopt, groebner_options(o));
    Json r = to_json(rep);
    r["input"] = std::move(input);
    return {r, rep.verdict()};
  }
  if (which == "cor44") {
    if (fs.size() != 2) throw InputError("cor44 takes exactly two --f");
    const PlaneBoundResult res = check_plane_bound(fs[0], fs[1], w, groebner_options(o));
    Json r = to_json(res);
    r["input"] = std::move(input);
    return {r, res.verdict()};
  }

  const UPoly phi_z = parse_upoly_over_z(require(o.phi, "--phi"), fs.size());
  const Polynomial g = parse_polynomial(require(o.g, "--g"), n);
  input["phi"] = o.phi;
  input["g"] = g.str();
  IneqReport rep;
  if (which == "main") {
    rep = check_main_inequality(fs, phi_z, g, w);
  } else if (which == "t34a") {
    rep = check_degree_quotient_bound(fs, phi_z, g, w, groebner_options(o));
  } else if (which == "t34b") {
    rep = check_annihilator_bound(fs, phi_z, g, w, groebner_options(o));
  } else if (which == "su") {
    if (fs.size() != 1) throw InputError("su takes exactly one --f");
    rep = check_lcm_bound(fs[0], phi_z, g, w, groebner_options(o));
  } else {
    throw InputError("unknown check '" + which + "'");
  }
  Json r = to_json(rep);
  r["input"] = std::move(input);
  return {r, rep.verdict()};
}

Outcome cmd_kernel(const Options& o) {
  std::vector<std::string> texts = o.images.empty() ? o.f : o.images;
  if (texts.empty()) throw InputError("kernel needs --images");
  const std::size_t n = o.n ? *o.n : std::max<std::size_t>(1, infer_nvars(texts));
  const std::vector<Polynomial> images = parse_all(texts, n);
  const GroebnerOptions gopts = groebner_options(o);
  const Ideal kernel = map_kernel(images, gopts);
  Json r;
  r["images"] = Json::array();
  for (const Polynomial& p : images) r["images"].push_back(p.str());
  const auto names = y_names(images.size());
  r["generators"] = Json::array();
  for (const Polynomial& q : kernel.generators()) r["generators"].push_back(q.str(names));
  if (kernel.generators().size() == 1) {
    r["principal"] = principal_generator(kernel, gopts).str(names);
  } else {
    r["principal"] = nullptr;
  }
  return {r, true};
}

Json delta_json(const DeltaData& d) {
  Json r;
  r["Q"] = d.q.str(y_names(d.q.nvars()));
  r["w_f"] = weights_json(d.w_f);
  r["delta"] = to_json(d.delta);
  r["subset"] = Json::array();
  for (std::size_t i : d.subset) r["subset"].push_back(i + 1);
  r["complement"] = d.complement + 1;
  return r;
}

Outcome cmd_delta(const Options& o) {
  const WeightVector w = parse_weights(o);
  const std::vector<Polynomial> fs = parse_all(o.f, w.size());
  if (fs.size() != w.size()) throw InputError("delta takes n polynomials for n weights");
  Json r = delta_json(delta_invariant(fs, w, groebner_options(o)));
  r["w"] = weights_json(w);
  return {r, true};
}

Outcome cmd_nagata(const Options& o) {
  const WeightVector w = (o.w.empty() && o.w_lex.empty()) ? WeightVector::uniform(3) : parse_weights(o);
  if (w.size() != 3) throw InputError("the Nagata map needs three weights");
  const PolyMap tau = nagata();
  const PolyMap inv = nagata_inverse();
  Json r;
  r["images"] = Json::array();
  r["degrees"] = Json::array();
  for (const Polynomial& p : tau.images()) {
    r["images"].push_back(p.str());
    r["degrees"].push_back(p.total_degree());
  }
  const Polynomial jac = jacobian_det(tau);
  r["jacobian"] = jac.str();
  r["w"] = weights_json(w);
  const DeltaData d = delta_invariant(tau.images(), w);
  r["kernel"] = d.q.str(y_names(3));
  r["delta"] = to_json(d.delta);
  r["w_f"] = weights_json(d.w_f);
  const IneqReport rep = check_automorphism_bound(tau.images(), w, inv.images());
  r["t43"] = to_json(rep);
  return {r, rep.verdict() && jac == Polynomial::constant(3, 1)};
}

Outcome cmd_campaign(const Options& o) {
  CampaignConfig c;
  c.suite = require(o.suite, "--suite");
  c.trials = o.trials;
  c.seed = o.seed;
  c.jobs = o.jobs;
  c.n = o.n;
  c.deg_bound = o.deg_bound;
  const CampaignResult res = run_campaign(c);
  return {res.to_json(false), res.ok()};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted degree bounds for polynomials and polynomial maps"};
  app.name("wdeg");
  app.require_subcommand(1);
  Options o;

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", o.out_file, "Also write the JSON report to this file");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--max-steps", o.max_steps, "Groebner reduction step budget (exit 3 when exceeded)");
  };
  auto add_weights = [&](CLI::App* sub) {
    sub->add_option("--w", o.w, "Comma-separated integer weights");
    sub->add_option("--w-lex", o.w_lex, "Weights in Z^k: tuples separated by ';'");
  };

  CLI::App* degree = app.add_subcommand("degree", "Weighted degree of --f");
  degree->add_option("--f", o.f, "Polynomial in x1..xn")->required();
  add_weights(degree);
  add_out(degree);

  CLI::App* initial = app.add_subcommand("initial", "Initial form of --f");
  initial->add_option("--f", o.f, "Polynomial in x1..xn")->required();
  add_weights(initial);
  add_out(initial);

  CLI::App* minv = app.add_subcommand("minv", "Cancellation depth m of Phi at g, both ways");
  minv->add_option("--phi", o.phi, "Polynomial in x1..xn and y")->required();
  minv->add_option("--g", o.g, "Polynomial in x1..xn")->required();
  add_weights(minv);
  add_out(minv);

  CLI::App* check = app.add_subcommand("check", "Check one inequality with full evidence");
  check->require_subcommand(1);
  const std::pair<const char*, const char*> checks[] = {
      {"main", "deg_w Phi(g) against the differential-form lower bound"},
      {"t34a", "Bound through the degree of g^w over the initial field"},
      {"t34b", "Bound through the minimal annihilator of g^w"},
      {"su", "Bound for one f through lcm of degrees"},
      {"t43", "Sum of degrees of an automorphism against delta"},
      {"cor44", "Plane automorphism bound and degree divisibility"},
  };
  for (const auto& [name, about] : checks) {
    CLI::App* sub = check->add_subcommand(name, about);
    sub->add_option("--f", o.f, "f_i in x1..xn (repeat)")->required();
    sub->add_option("--phi", o.phi, "Phi in z1..zr (standing for the f's) and y");
    sub->add_option("--g", o.g, "g in x1..xn");
    sub->add_option("--inverse", o.inverse, "x_i as a polynomial in x1..xn read as the f's (t43)");
    add_weights(sub);
    add_budget(sub);
    add_out(sub);
  }

  CLI::App* kernel = app.add_subcommand("kernel", "Kernel of y_i -> image_i");
  kernel->add_option("--images", o.images, "Images in x1..xn (repeat)")->required();
  kernel->add_option("--n", o.n, "Number of x variables (default: largest index used)");
  add_budget(kernel);
  add_out(kernel);

  CLI::App* delta = app.add_subcommand("delta", "Delta invariant of a map");
  delta->add_option("--f", o.f, "Map components (repeat n times)")->required();
  add_weights(delta);
  add_budget(delta);
  add_out(delta);

  CLI::App* nag = app.add_subcommand("nagata", "The Nagata map and its analysis");
  add_weights(nag);
  add_out(nag);

  CLI::App* camp = app.add_subcommand("campaign", "Seeded randomized verification campaign");
  camp->add_option("--suite", o.suite, "main, t34, su, twomax, jung or t43")->required();
  camp->add_option("--trials", o.trials, "Number of trials")->check(CLI::PositiveNumber);
  camp->add_option("--seed", o.seed, "Campaign seed");
  camp->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)");
  camp->add_option("--n", o.n, "Ring size override");
  camp->add_option("--deg-bound", o.deg_bound, "Degree bound override");
  add_out(camp);

  std::vector<std::string> argv_store{"wdeg"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  auto emit = [&](Json doc) {
    const std::string text = doc.dump(2);
    out << text << '\n';
    if (!o.out_file.empty()) {
      std::ofstream file(o.out_file);
      if (!file) throw InputError("cannot write " + o.out_file);
      file << text << '\n';
    }
  };
  auto fail = [&](const char* kind, const std::string& message, int code) {
    err << "wdeg: " << message << '\n';
    Json doc;
    doc["error"] = {{"kind", kind}, {"message", message}};
    doc["exit_code"] = code;
    out << doc.dump(2) << '\n';
    return code;
  };

  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome result;
    std::string command;
    if (degree->parsed()) {
      command = "degree";
      result = cmd_degree(o);
    } else if (initial->parsed()) {
      command = "initial";
      result = cmd_initial(o);
    } else if (minv->parsed()) {
      command = "minv";
      result = cmd_minv(o);
    } else if (check->parsed()) {
      for (CLI::App* sub : check->get_subcommands()) {
        command = "check " + sub->get_name();
        result = cmd_check(sub->get_name(), o);
      }
    } else if (kernel->parsed()) {
      command = "kernel";
      result = cmd_kernel(o);
    } else if (delta->parsed()) {
      command = "delta";
      result = cmd_delta(o);
    } else if (nag->parsed()) {
      command = "nagata";
      result = cmd_nagata(o);
    } else {
      command = "campaign";
      result = cmd_campaign(o);
    }
    Json doc;
    doc["command"] = command;
    doc["args"] = args;
    doc["version"] = kVersion;
    for (auto& [key, value] : result.report.items()) doc[key] = value;
    doc["exit_code"] = result.verdict ? kExitOk : kExitVerdictFailure;
    doc["wall_time"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(std::move(doc));
    if (!result.verdict) err << "wdeg: verdict failure in " << command << '\n';
    return result.verdict ? kExitOk : kExitVerdictFailure;
  } catch (const ParseError& e) {
    return fail("parse", e.what(), kExitInputError);
  } catch (const InputError& e) {
    return fail("input", e.what(), kExitInputError);
  } catch (const CapacityError& e) {
    return fail("capacity", e.what(), kExitCapacityError);
  } catch (const InternalError& e) {
    // A step of a proof failed to check: treated like a false verdict.
    return fail("internal", e.what(), kExitVerdictFailure);
  }
}

}  // namespace wdeg
