#include "stralg/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "stralg/bricks.hpp"
#include "stralg/error.hpp"
#include "stralg/recover.hpp"
#include "stralg/sturmian.hpp"

namespace stralg::cli {

using nlohmann::json;

namespace {

struct Result {
  int code = kExitTrue;
  json doc = json::object();
  std::ostringstream text;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

algebra::StringAlgebra load_algebra(const std::string& path) {
  return algebra::StringAlgebra(algebra::parse_presentation(read_file(path)));
}

json report_json(const BrickReport& r) {
  json j{{"method", std::string(to_string(r.method))},
         {"brick", r.brick},
         {"periodicity", r.periodicity},
         {"scope", r.scope},
         {"reason", r.reason}};
  if (r.end_dim) j["end_dim"] = *r.end_dim;
  if (r.witness) {
    const auto& w = *r.witness;
    j["witness"] = {{"text", w.text},
                    {"factor", {w.factor_begin, w.factor_end}},
                    {"image", {w.image_begin, w.image_end}},
                    {"image_in_inverse", w.image_in_inverse}};
  }
  return j;
}

void report_text(std::ostream& os, const BrickReport& r) {
  os << to_string(r.method) << ": " << (r.brick ? "brick" : "not brick");
  if (r.end_dim) os << " (dim End = " << *r.end_dim << ")";
  if (!r.reason.empty()) os << "; " << r.reason;
  if (r.witness)
    os << "; witness " << r.witness->text << " factor [" << r.witness->factor_begin << "," << r.witness->factor_end
       << ") image [" << r.witness->image_begin << "," << r.witness->image_end << ")"
       << (r.witness->image_in_inverse ? " in inverse" : "");
  os << "\n";
}

int verdicts(Result& res, const std::vector<BrickReport>& reps) {
  bool agree = true;
  res.doc["reports"] = json::array();
  for (const auto& r : reps) {
    agree = agree && r.brick == reps.front().brick;
    res.doc["reports"].push_back(report_json(r));
    report_text(res.text, r);
  }
  res.doc["agree"] = agree;
  res.doc["brick"] = reps.front().brick;
  if (!agree) {
    res.text << "methods disagree\n";
    return kExitCap;
  }
  return reps.front().brick ? kExitTrue : kExitFalse;
}

struct Options {
  std::string file;
  std::string syllables;
  std::string method = "all";
  bool parity = false;
  std::string dot;
  std::size_t max_len = 4;
  std::size_t l = 1;
  std::uint64_t lambda = 1;
  std::string directive;
  std::size_t prefix = 0;
  std::size_t drop = 0;
  bool do_bridge = false;
  bool do_check = false;
  bool right_infinite = false;
};

int cmd_validate(const Options& o, Result& res) {
  auto p = algebra::parse_presentation(read_file(o.file));
  auto rep = algebra::validate_string_algebra(p);
  res.doc["is_string_algebra"] = rep.is_string_algebra;
  res.doc["is_gentle"] = rep.is_gentle;
  res.doc["admissibility_bound"] = rep.admissibility_bound ? json(*rep.admissibility_bound) : json(nullptr);
  res.doc["violations"] = json::array();
  for (const auto& v : rep.violations) {
    res.doc["violations"].push_back({{"code", v.code}, {"locus", v.locus}});
    res.text << "violation " << v.code << ": " << v.locus << "\n";
  }
  res.text << (rep.is_string_algebra ? "string algebra" : "not a string algebra");
  if (rep.is_string_algebra) res.text << (rep.is_gentle ? ", gentle" : ", not gentle");
  if (rep.admissibility_bound) res.text << ", relation-free paths have length <= " << *rep.admissibility_bound;
  res.text << "\n";
  return rep.is_string_algebra ? kExitTrue : kExitFalse;
}

int cmd_signs(const Options& o, Result& res) {
  auto A = load_algebra(o.file);
  res.doc["signs"] = json::array();
  for (algebra::ArrowIdx a = 0; a < A.num_arrows(); ++a) {
    const auto s = A.signs()[a];
    res.doc["signs"].push_back({{"arrow", A.arrow(a).id}, {"sigma", s.sigma}, {"eps", s.eps}});
    res.text << "sign " << A.arrow(a).id << " " << (s.sigma > 0 ? "+1" : "-1") << " " << (s.eps > 0 ? "+1" : "-1")
             << "\n";
  }
  return kExitTrue;
}

int cmd_build_mia(const Options& o, Result& res) {
  auto A = load_algebra(o.file);
  const auto P = construct::parity_mia(A);
  const mia::Mia& m = o.parity ? P.binary : P.base.mia;
  const auto issues = mia::validate_mia(m);
  res.doc["states"] = m.num_states();
  res.doc["initial_states"] = m.initial_states().size();
  res.doc["valid"] = issues.empty();
  res.doc["automaton"] = mia::write_mia(m);
  res.text << mia::write_mia(m);
  for (const auto& i : issues) res.text << "# axiom " << i.axiom << ": " << i.message << "\n";
  if (!o.dot.empty()) {
    std::ofstream f(o.dot);
    if (!f) throw InputError("cannot write " + o.dot);
    f << mia::to_dot(m);
  }
  return issues.empty() ? kExitTrue : kExitFalse;
}

int cmd_strings(const Options& o, Result& res, bool bands) {
  auto A = load_algebra(o.file);
  const auto list = bands ? strings::enumerate_bands(A, o.max_len) : strings::enumerate_strings(A, o.max_len);
  res.doc[bands ? "bands" : "strings"] = json::array();
  for (const auto& x : list) {
    const auto s = strings::format_string(A, x);
    res.doc[bands ? "bands" : "strings"].push_back(s);
    res.text << s << "\n";
  }
  res.doc["count"] = list.size();
  return kExitTrue;
}

void check_method(const std::string& m) {
  if (m != "all" && m != "direct" && m != "automaton" && m != "endo")
    throw InputError("unknown method " + m + " (direct, automaton, endo or all)");
}

int cmd_string_brick(const Options& o, Result& res) {
  check_method(o.method);
  auto A = load_algebra(o.file);
  const auto x = strings::parse_string(A, o.syllables);
  res.doc["string"] = strings::format_string(A, x);
  std::vector<BrickReport> reps;
  if (o.method == "direct" || o.method == "all") reps.push_back(bricks::string_brick_direct(A, x));
  if (o.method == "automaton" || o.method == "all") {
    bricks::Automata ctx(A);
    reps.push_back(bricks::string_brick_automaton(ctx, x));
  }
  if (o.method == "endo" || o.method == "all") reps.push_back(bricks::string_brick_endo(A, x));
  return verdicts(res, reps);
}

int cmd_band_brick(const Options& o, Result& res) {
  check_method(o.method);
  auto A = load_algebra(o.file);
  const auto b = strings::parse_string(A, o.syllables);
  if (auto c = strings::is_band(A, b); !c.ok)
    throw InputError("not a band: " + (c.reasons.empty() ? std::string("?") : c.reasons.front()));
  res.doc["band"] = strings::format_string(A, b);
  res.doc["l"] = o.l;
  res.doc["lambda"] = o.lambda;
  std::vector<BrickReport> reps;
  if (o.method == "direct" || o.method == "all") reps.push_back(bricks::band_brick_direct(A, b, o.l, o.lambda));
  if (o.method == "automaton" || o.method == "all") {
    bricks::Automata ctx(A);
    reps.push_back(bricks::band_brick_automaton(ctx, b, o.l));
  }
  if (o.method == "endo" || o.method == "all") reps.push_back(bricks::band_brick_endo(A, b, o.l, o.lambda));
  return verdicts(res, reps);
}

int cmd_enumerate_bricks(const Options& o, Result& res) {
  auto A = load_algebra(o.file);
  json js = json::array(), jb = json::array();
  for (const auto& x : strings::enumerate_strings(A, o.max_len))
    if (bricks::string_brick_direct(A, x).brick) {
      js.push_back(strings::format_string(A, x));
      res.text << "string " << strings::format_string(A, x) << "\n";
    }
  for (const auto& b : strings::enumerate_bands(A, o.max_len))
    if (bricks::band_brick_direct(A, b, 1, 1).brick) {
      jb.push_back(strings::format_string(A, b));
      res.text << "band " << strings::format_string(A, b) << "\n";
    }
  res.doc["string_bricks"] = js;
  res.doc["band_bricks"] = jb;
  return kExitTrue;
}

int cmd_sturmian(const Options& o, Result& res) {
  const auto d = sturmian::parse_directive(o.directive);
  if (o.prefix == 0) throw InputError("--prefix must be positive");
  if (o.drop >= o.prefix) throw InputError("--drop must be smaller than --prefix");
  auto w = sturmian::characteristic_prefix(d, o.prefix);
  if (o.drop) {
    w.letters.erase(w.letters.begin(), w.letters.begin() + static_cast<long>(o.drop));
    w.origin += " from " + std::to_string(o.drop);
  }
  res.doc["directive"] = d.to_string();
  res.doc["length"] = w.letters.size();
  res.doc["certified_aperiodic"] = w.certified_aperiodic;
  int code = kExitTrue;
  if (!o.do_check && !o.do_bridge) {
    const auto s = words::ab_string(w.letters);
    res.doc["prefix"] = s;
    res.text << s << "\n";
  }
  if (o.do_check) {
    auto v = sturmian::sturmian_window_check(w);
    res.doc["violation"] = v ? json{{"middle", words::ab_string(v->middle)}, {"a_pos", v->a_pos}, {"b_pos", v->b_pos}}
                             : json(nullptr);
    if (v) {
      res.text << "violation: a" << words::ab_string(v->middle) << "a at " << v->a_pos << ", b"
               << words::ab_string(v->middle) << "b at " << v->b_pos << "\n";
      code = kExitFalse;
    } else {
      res.text << "no violation in window\n";
    }
  }
  if (o.do_bridge) {
    const auto side = o.right_infinite ? sturmian::BridgeSide::right_infinite : sturmian::BridgeSide::bi_infinite;
    auto br = sturmian::bridge(w, side);
    json jb{{"side", o.right_infinite ? "right_infinite" : "bi_infinite"},
            {"report", report_json(br.report)},
            {"sturmian_violation", br.sturmian_violation},
            {"consistent", br.consistent}};
    if (br.middle) jb["middle"] = words::ab_string(*br.middle);
    res.doc["bridge"] = jb;
    report_text(res.text, br.report);
    if (br.middle) res.text << "middle word " << (br.middle->empty() ? std::string("(empty)") : words::ab_string(*br.middle)) << "\n";
    res.text << (br.consistent ? "consistent with the criterion\n" : "inconsistent with the criterion\n");
    if (!br.consistent) return kExitCap;
    if (br.report.witness) code = kExitFalse;
  }
  return code;
}

json presentation_json(const algebra::Presentation& p) {
  json rels = json::array();
  for (const auto& r : p.relations) rels.push_back(p.path_string(r));
  json arrows = json::array();
  for (const auto& a : p.arrows)
    arrows.push_back({{"id", a.id}, {"source", p.vertices[a.source]}, {"target", p.vertices[a.target]}});
  return {{"vertices", p.vertices}, {"arrows", arrows}, {"relations", rels}};
}

int cmd_recover(const Options& o, Result& res) {
  const auto m = mia::parse_mia(read_file(o.file));
  const auto rp = recover::recover_presentation(m);
  res.doc["presentation"] = presentation_json(rp.presentation);
  json prov = json::array();
  for (std::size_t v = 0; v < rp.vertex_states.size(); ++v)
    prov.push_back({{"vertex", rp.presentation.vertices[v]},
                    {"states", {m.name(rp.vertex_states[v].first), m.name(rp.vertex_states[v].second)}}});
  res.doc["vertex_states"] = prov;
  res.text << algebra::print_presentation(rp.presentation);
  for (const auto& e : prov) res.text << "# " << e["vertex"].get<std::string>() << " = {" << e["states"][0].get<std::string>()
                                      << ", " << e["states"][1].get<std::string>() << "}\n";
  return kExitTrue;
}

int cmd_roundtrip(const Options& o, Result& res) {
  auto A = load_algebra(o.file);
  const auto P = construct::parity_mia(A);
  const auto m = mia::parse_mia(mia::write_mia(P.binary));
  const auto rp = recover::recover_presentation(m);
  auto iso = recover::presentations_isomorphic(A.presentation(), rp.presentation);
  res.doc["recovered"] = presentation_json(rp.presentation);
  res.doc["isomorphic"] = iso.has_value();
  if (!iso) {
    res.text << "not isomorphic\n" << algebra::print_presentation(rp.presentation);
    return kExitFalse;
  }
  std::vector<algebra::Path> mapped;
  for (const auto& r : A.presentation().relations) {
    algebra::Path q;
    for (auto a : r) q.push_back(iso->arrow_map[a]);
    mapped.push_back(q);
  }
  const bool ideal = recover::same_ideal(mapped, rp.presentation.relations);
  res.doc["same_ideal"] = ideal;
  json jv = json::object(), ja = json::object();
  for (std::size_t v = 0; v < iso->vertex_map.size(); ++v)
    jv[A.presentation().vertices[v]] = rp.presentation.vertices[iso->vertex_map[v]];
  for (std::size_t a = 0; a < iso->arrow_map.size(); ++a)
    ja[A.presentation().arrows[a].id] = rp.presentation.arrows[iso->arrow_map[a]].id;
  res.doc["vertex_map"] = jv;
  res.doc["arrow_map"] = ja;
  res.text << "isomorphic\n" << recover::format_isomorphism(A.presentation(), rp.presentation, *iso);
  return ideal ? kExitTrue : kExitFalse;
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"String algebras, their automata and bricks", "stralg"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Print one JSON document");
  Options o;
  std::function<int(Result&)> run;

  auto file_cmd = [&](const std::string& name, const std::string& help, auto fn) {
    auto* sc = app.add_subcommand(name, help);
    sc->add_option("FILE", o.file, "Input file")->required();
    sc->callback([&, fn] { run = [&, fn](Result& r) { return fn(o, r); }; });
    return sc;
  };
  file_cmd("validate", "Check the string algebra conditions", cmd_validate);
  file_cmd("signs", "Solve or check the sign maps", cmd_signs);
  auto* bm = file_cmd("build-mia", "Build the automaton", cmd_build_mia);
  bm->add_flag("--parity", o.parity, "Binary relabelling");
  bm->add_option("--dot", o.dot, "Write DOT to this file");
  auto* st = file_cmd("strings", "List strings", [](const Options& op, Result& r) { return cmd_strings(op, r, false); });
  st->add_option("--max-len", o.max_len)->required();
  auto* bd = file_cmd("bands", "List bands", [](const Options& op, Result& r) { return cmd_strings(op, r, true); });
  bd->add_option("--max-len", o.max_len)->required();
  auto* cs = file_cmd("check-string-brick", "Decide whether a string module is a brick", cmd_string_brick);
  cs->add_option("SYLLABLES", o.syllables)->required();
  cs->add_option("--method", o.method, "direct, automaton, endo or all");
  auto* cb = file_cmd("check-band-brick", "Decide whether a band module is a brick", cmd_band_brick);
  cb->add_option("SYLLABLES", o.syllables)->required();
  cb->add_option("--l", o.l)->required();
  cb->add_option("--lambda", o.lambda);
  cb->add_option("--method", o.method, "direct, automaton, endo or all");
  auto* eb = file_cmd("enumerate-bricks", "List brick strings and bands", cmd_enumerate_bricks);
  eb->add_option("--max-len", o.max_len)->required();
  file_cmd("recover", "Rebuild a presentation from a binary automaton", cmd_recover);
  file_cmd("roundtrip", "Recover the presentation from its own binary automaton", cmd_roundtrip);

  auto* sm = app.add_subcommand("sturmian", "Characteristic Sturmian prefixes");
  sm->add_option("--directive", o.directive)->required();
  sm->add_option("--prefix", o.prefix)->required();
  sm->add_option("--drop", o.drop, "Drop this many leading letters");
  sm->add_flag("--bridge", o.do_bridge, "Run the brick-word check on the substituted string");
  sm->add_flag("--check", o.do_check, "Look for a w' with both a w' a and b w' b");
  sm->add_flag("--right-infinite", o.right_infinite, "Bridge with a genuine left end");
  sm->callback([&] { run = [&](Result& r) { return cmd_sturmian(o, r); }; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitTrue;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitInput;
  }

  Result res;
  std::string command = app.get_subcommands().front()->get_name();
  std::string error_kind;
  try {
    res.code = run(res);
  } catch (const InputError& e) {
    res.code = kExitInput;
    error_kind = "input";
    err << "error: " << e.what() << "\n";
    res.doc["error"] = {{"kind", error_kind}, {"message", e.what()}};
  } catch (const Unsupported& e) {
    res.code = kExitInput;
    err << "unsupported: " << e.what() << "\n";
    res.doc["error"] = {{"kind", "unsupported"}, {"message", e.what()}};
  } catch (const CapExceeded& e) {
    res.code = kExitCap;
    err << "cap exceeded: " << e.what() << "\n";
    res.doc["error"] = {{"kind", "cap"}, {"message", e.what()}};
  } catch (const Error& e) {
    res.code = kExitCap;
    err << "error: " << e.what() << "\n";
    res.doc["error"] = {{"kind", "internal"}, {"message", e.what()}};
  }
  if (as_json) {
    res.doc["schema_version"] = kSchemaVersion;
    res.doc["command"] = command;
    res.doc["exit_code"] = res.code;
    out << res.doc.dump(2) << "\n";
  } else {
    out << res.text.str();
  }
  return res.code;
}

}  // namespace stralg::cli
