#include "apolar/cli.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "apolar/errors.hpp"
#include "apolar/symdec.hpp"

namespace apolar::cli {

using nlohmann::json;

namespace {

json to_json(const HSeq& h) { return h.values(); }

json to_json(const std::vector<Poly>& gens) {
  json a = json::array();
  for (const auto& g : gens) a.push_back(g.to_string());
  return a;
}

json to_json(const SymDecomp& D) {
  json rows = json::array();
  for (const auto& [a, r] : D.rows()) rows.push_back({{"shift", a}, {"row", r}});
  return {{"text", D.to_string()}, {"rows", rows}};
}

json ideal_json(const Ideal& I) {
  return {{"ideal", I.to_string()},
          {"generators", to_json(I.generators())},
          {"hilbert_function", to_json(I.hilbert_function())},
          {"minimal_generator_count", minimal_generator_count(I)}};
}

// Reparse the printed generators and compare the invariants.
bool round_trip(const Ideal& I, const Field& field) {
  Ideal again(parse_poly_list(I.to_string(), I.nvars(), field));
  return again.hilbert_function() == I.hilbert_function() &&
         minimal_generator_count(again) == minimal_generator_count(I);
}

Report guarded(const std::string& command, json inputs, const std::string& field_text,
               const std::function<int(const Field&, json&)>& body) {
  Report rep;
  rep.json = {{"schema", 1}, {"command", command}, {"inputs", std::move(inputs)}};
  auto t0 = std::chrono::steady_clock::now();
  auto fail = [&](int code, const char* kind, const std::exception& e) {
    rep.exit_code = code;
    rep.json["error"] = {{"kind", kind}, {"message", e.what()}};
  };
  try {
    Field field = Field::parse(field_text);
    rep.json["field"] = field.name();
    json outputs = json::object();
    rep.exit_code = body(field, outputs);
    rep.json["outputs"] = std::move(outputs);
  } catch (const ParseError& e) {
    fail(kUsage, "ParseError", e);
    rep.json["error"]["position"] = e.position();
  } catch (const FieldError& e) {
    fail(kUsage, "FieldError", e);
  } catch (const ArityMismatch& e) {
    fail(kUsage, "ArityMismatch", e);
  } catch (const Rejected& e) {
    fail(kRejected, "Rejected", e);
    rep.json["error"]["verdict"] = e.verdict();
  } catch (const NotGorenstein& e) {
    fail(kRejected, "NotGorenstein", e);
  } catch (const NotArtinian& e) {
    fail(kRejected, "NotArtinian", e);
  } catch (const PreconditionFailed& e) {
    fail(kRejected, "PreconditionFailed", e);
  } catch (const UnrealizableByPowers& e) {
    fail(kRejected, "UnrealizableByPowers", e);
  } catch (const VerificationFailure& e) {
    fail(kInternal, "VerificationFailure", e);
  } catch (const std::exception& e) {
    fail(kInternal, "InternalError", e);
  }
  rep.json["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

json classification_json(const Classification& c) {
  json j = {{"verdict", to_string(c.verdict)}, {"reason", c.reason}};
  if (c.verdict == Verdict::TypeI) j["witness"] = {{"u", c.uvw[0]}, {"v", c.uvw[1]}, {"w", c.uvw[2]}};
  if (c.verdict == Verdict::TypeII || c.verdict == Verdict::TypeIII) {
    j["witness"] = {{"d", c.d}, {"r", c.r}, {"peak", c.peak}};
  }
  return j;
}

json prediction_json(const Prediction& p) {
  json j = {{"ci", to_json(p.ci)}};
  j["other"] = p.other ? to_json(*p.other) : json(nullptr);
  return j;
}

// One admissible sequence of the sweep, checked end to end.
json sweep_one(const HSeq& h, const Field& field, bool& ok) {
  json r = {{"h", h.to_string()}};
  ok = false;
  try {
    ConstructOptions opt;
    opt.field = field;
    ConstructionTrace tr = construct_ci_traced(h, opt);
    const Ideal& I = *tr.ideal;
    r["ideal"] = I.to_string();
    SymDecomp D = symmetric_decomposition(I);
    Prediction p = predicted_decomposition(h);
    r["decomposition"] = D.to_string();
    bool dec_ok = D == p.ci && D.is_symmetric() && D.total() == h;
    r["decomposition_matches"] = dec_ok;
    bool wit_ok = true;
    if (p.other) {
      Ideal J = annihilator(non_ci_witness(h, field));
      SymDecomp E = symmetric_decomposition(J);
      int mg = minimal_generator_count(J);
      wit_ok = J.hilbert_function() == h && is_gorenstein(J) && mg >= 4 && E == *p.other && E.is_symmetric();
      r["witness"] = {{"decomposition", E.to_string()}, {"minimal_generator_count", mg}, {"ok", wit_ok}};
    }
    ok = dec_ok && wit_ok;
  } catch (const std::exception& e) {
    r["error"] = e.what();
  }
  r["ok"] = ok;
  return r;
}

}  // namespace

Report cmd_classify(const std::string& h_text) {
  return guarded("classify", {{"h", h_text}}, "q", [&](const Field&, json& out) {
    HSeq h = HSeq::parse(h_text);
    Classification c = classify_133(h);
    out = classification_json(c);
    out["h"] = to_json(h);
    return c.admissible() ? kOk : kRejected;
  });
}

Report cmd_construct(const std::string& h_text, const std::optional<std::string>& dual_F,
                     const std::optional<std::string>& dual_G, const std::string& field_text) {
  json inputs = {{"h", h_text}};
  if (dual_F) inputs["dual_F"] = *dual_F;
  if (dual_G) inputs["dual_G"] = *dual_G;
  return guarded("construct", inputs, field_text, [&](const Field& field, json& out) {
    HSeq h = HSeq::parse(h_text);
    ConstructOptions opt;
    opt.field = field;
    if (dual_F) opt.dual_F = parse_dual(*dual_F, 2, field);
    if (dual_G) opt.dual_G = parse_dual(*dual_G, 2, field);
    ConstructionTrace tr = construct_ci_traced(h, opt);
    out["classification"] = classification_json(tr.classification);
    if (tr.syzygy) {
      const SyzygyData& sd = *tr.syzygy;
      json steps = {{"h_prime", to_json(tr.h1)},
                    {"h_double_prime", to_json(tr.h2)},
                    {"F", tr.F.to_string()},
                    {"G", tr.G.to_string()},
                    {"G_normalized", tr.G_normalized.to_string()},
                    {"a2p", sd.a2p.to_string()},
                    {"syzygy", {{"d11", sd.d11.to_string()}, {"d21", sd.d21.to_string()}, {"d12", sd.d12.to_string()}}},
                    {"U", sd.U().to_string()},
                    {"V", sd.V().to_string()},
                    {"W", sd.W().to_string()}};
      if (tr.power_sum) steps["F_exponents"] = tr.power_sum->exponents;
      out["steps"] = steps;
    }
    const Ideal& I = *tr.ideal;
    out.update(ideal_json(I));
    json checks = tr.checks;
    bool rt = round_trip(I, field);
    checks.push_back(std::string("round trip ") + (rt ? "ok" : "FAILED"));
    out["verification"] = {{"checks", checks}, {"round_trip", rt}};
    return rt ? kOk : kInternal;
  });
}

Report cmd_decompose(const std::optional<std::string>& ideal_text, const std::optional<std::string>& dual_text,
                     bool predict, const std::string& field_text) {
  json inputs = json::object();
  if (ideal_text) inputs["ideal"] = *ideal_text;
  if (dual_text) inputs["dual"] = *dual_text;
  inputs["predict"] = predict;
  return guarded("decompose", inputs, field_text, [&](const Field& field, json& out) {
    if (ideal_text.has_value() == dual_text.has_value()) throw ParseError(0, "give exactly one of --ideal and --dual");
    std::optional<Ideal> I;
    if (ideal_text) {
      I.emplace(parse_poly_list(*ideal_text, 3, field));
    } else {
      I.emplace(annihilator(parse_dual(*dual_text, 3, field)));
    }
    out.update(ideal_json(*I));
    const bool ci = is_complete_intersection(*I);
    out["complete_intersection"] = ci;
    SymDecomp D = symmetric_decomposition(*I);
    out["decomposition"] = to_json(D);
    out["symmetric"] = D.is_symmetric();
    out["sums_to_h"] = D.total() == I->hilbert_function();
    if (!predict) return kOk;
    const HSeq& h = I->hilbert_function();
    Classification c = classify_133(h);
    if (!c.admissible()) {
      out["prediction"] = nullptr;
      out["agreement"] = "not applicable: " + c.reason;
      return kOk;
    }
    Prediction p = predicted_decomposition(h);
    out["prediction"] = prediction_json(p);
    std::string agreement = "none";
    if (D == p.ci) {
      agreement = "ci";
    } else if (p.other && D == *p.other) {
      agreement = "other: not CI-realizable";
    }
    out["agreement"] = agreement;
    // A complete intersection must land on the CI prediction.
    return ci && agreement != "ci" ? kInternal : kOk;
  });
}

Report cmd_sweep(int socle_max, const std::string& field_text, unsigned jobs) {
  return guarded("sweep", {{"socle_max", socle_max}}, field_text, [&](const Field& field, json& out) {
    if (socle_max < 0) throw PreconditionFailed("socle degree bound must be nonnegative");
    std::vector<HSeq> all = enumerate_133(socle_max);
    std::vector<Classification> verdicts;
    std::vector<std::size_t> admissible;
    for (std::size_t i = 0; i < all.size(); ++i) {
      verdicts.push_back(classify_133(all[i]));
      if (verdicts.back().admissible()) admissible.push_back(i);
    }
    std::vector<json> results(admissible.size());
    std::vector<char> ok(admissible.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t k; (k = next.fetch_add(1)) < admissible.size();) {
        bool good = false;
        results[k] = sweep_one(all[admissible[k]], field, good);
        ok[k] = good;
      }
    };
    unsigned n = jobs ? jobs : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::map<std::string, int> counts;
    for (const auto& c : verdicts) ++counts[to_string(c.verdict)];
    int failures = 0, witnesses = 0;
    for (std::size_t k = 0; k < results.size(); ++k) {
      if (!ok[k]) ++failures;
      if (results[k].contains("witness")) ++witnesses;
    }
    out["sequences"] = all.size();
    out["verdicts"] = counts;
    out["admissible"] = admissible.size();
    out["witnesses"] = witnesses;
    out["failures"] = failures;
    out["results"] = results;
    return failures == 0 ? kOk : kInternal;
  });
}

Report cmd_hf(const std::string& ideal_text, const std::string& field_text) {
  return guarded("hf", {{"ideal", ideal_text}}, field_text, [&](const Field& field, json& out) {
    int nvars = ideal_text.find_first_of("zZ") == std::string::npos ? 2 : 3;
    Ideal I(parse_poly_list(ideal_text, nvars, field));
    out.update(ideal_json(I));
    out["colength"] = I.colength();
    out["socle_degree"] = I.socle_degree();
    out["truncation_bound"] = I.truncation_bound();
    out["standard_basis"] = to_json(I.standard_basis());
    out["gorenstein"] = is_gorenstein(I);
    out["complete_intersection"] = is_complete_intersection(I);
    return kOk;
  });
}

Report cmd_ann(const std::string& dual_text, const std::string& field_text) {
  return guarded("ann", {{"dual", dual_text}}, field_text, [&](const Field& field, json& out) {
    int nvars = dual_text.find_first_of("zZ") == std::string::npos ? 2 : 3;
    DualPoly F = parse_dual(dual_text, nvars, field);
    Ideal I = annihilator(F);
    out.update(ideal_json(I));
    out["apolar_hf"] = to_json(apolar_hf(F));
    out["gorenstein"] = is_gorenstein(I);
    out["complete_intersection"] = is_complete_intersection(I);
    return kOk;
  });
}

std::string render_text(const json& j) {
  std::ostringstream os;
  std::function<void(const json&, const std::string&)> walk = [&](const json& v, const std::string& prefix) {
    if (v.is_object()) {
      for (auto it = v.begin(); it != v.end(); ++it) walk(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      for (std::size_t i = 0; i < v.size(); ++i) walk(v[i], prefix + "[" + std::to_string(i) + "]");
    } else {
      os << prefix << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  };
  walk(j, "");
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert functions of (1,3,3) local complete intersections"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string field = "q";
  bool pretty = false;
  app.add_option("--field", field, "q or fp:<odd prime>");
  auto* json_flag = app.add_flag("--json", "JSON output (default)");
  app.add_flag("--pretty", pretty, "plain text output")->excludes(json_flag);

  std::string h_text, ideal_text, dual_text;
  std::optional<std::string> dual_F, dual_G, ideal_opt, dual_opt;
  bool no_predict = false;
  int socle_max = 9;
  unsigned jobs = 0;

  auto* classify = app.add_subcommand("classify", "classify a (1,3,3) sequence");
  classify->add_option("sequence", h_text, "comma-separated Hilbert function")->required();

  auto* construct = app.add_subcommand("construct", "build a complete intersection with Hilbert function h");
  construct->add_option("sequence", h_text, "comma-separated Hilbert function")->required();
  construct->add_option("--dual-F", dual_F, "dual generator F in X, Y");
  construct->add_option("--dual-G", dual_G, "second dual generator G in X, Y");

  auto* decompose = app.add_subcommand("decompose", "symmetric decomposition of a Gorenstein quotient");
  decompose->add_option("--ideal", ideal_opt, "semicolon-separated generators");
  decompose->add_option("--dual", dual_opt, "dual generator");
  decompose->add_flag("--no-predict", no_predict, "skip the predicted decompositions");

  auto* sweep = app.add_subcommand("sweep", "classify and construct every (1,3,3) sequence up to a socle degree");
  sweep->add_option("--socle-max", socle_max, "largest socle degree")->check(CLI::Range(2, 20));
  sweep->add_option("--jobs", jobs, "worker threads, 0 for all");

  auto* hf = app.add_subcommand("hf", "Hilbert function of an ideal");
  hf->add_option("ideal", ideal_text, "semicolon-separated generators")->required();

  auto* ann = app.add_subcommand("ann", "annihilator of a dual polynomial");
  ann->add_option("dual", dual_text, "dual polynomial")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, x;
    int code = app.exit(e, o, x);
    out << o.str();
    err << x.str();
    return code == 0 ? kOk : kUsage;
  }

  try {
    Field::parse(field);
  } catch (const FieldError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  Report rep;
  if (classify->parsed()) {
    rep = cmd_classify(h_text);
  } else if (construct->parsed()) {
    rep = cmd_construct(h_text, dual_F, dual_G, field);
  } else if (decompose->parsed()) {
    rep = cmd_decompose(ideal_opt, dual_opt, !no_predict, field);
  } else if (sweep->parsed()) {
    rep = cmd_sweep(socle_max, field, jobs);
  } else if (hf->parsed()) {
    rep = cmd_hf(ideal_text, field);
  } else {
    rep = cmd_ann(dual_text, field);
  }
  if (pretty) {
    out << render_text(rep.json);
  } else {
    out << rep.json.dump() << "\n";
  }
  return rep.exit_code;
}

}  // namespace apolar::cli
