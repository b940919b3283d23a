// Copyright (c) the icx authors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end for the icx library: recognition, subgradients,
// conjugates, duality checks and instance generation over the text
// instance format. Output is line-oriented `key: value` (or JSON with
// --json); exit codes are 0 = ok, 1 = violation, 2 = error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "icx/checker.hpp"
#include "icx/conjugacy.hpp"
#include "icx/dc.hpp"
#include "icx/fm_subgradient.hpp"
#include "icx/instances.hpp"
#include "icx/parallel.hpp"
#include "icx/zfunction.hpp"

using namespace icx;

namespace {

enum class Status { Ok, Violation, Error };

struct CommandResult {
  Status status = Status::Ok;
  std::vector<std::pair<std::string, std::string>> payload;
  std::vector<std::string> witness;

  void add(const std::string& key, const std::string& value) {
    payload.emplace_back(key, value);
  }
};

int render(const CommandResult& res, bool json) {
  if (json) {
    nlohmann::json j;
    j["status"] = res.status == Status::Ok          ? "ok"
                  : res.status == Status::Violation ? "violation"
                                                    : "error";
    for (const auto& [k, v] : res.payload) j["payload"][k] = v;
    if (!res.witness.empty()) j["witness"] = res.witness;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "status: "
              << (res.status == Status::Ok          ? "ok"
                  : res.status == Status::Violation ? "violation"
                                                    : "error")
              << "\n";
    for (const auto& [k, v] : res.payload) std::cout << k << ": " << v << "\n";
    for (const auto& line : res.witness) std::cout << "  " << line << "\n";
  }
  return res.status == Status::Ok ? 0 : res.status == Status::Violation ? 1 : 2;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

ZPoint parse_point(const std::vector<std::string>& tokens, int dim) {
  ZPoint p;
  for (const auto& t : tokens) {
    std::string piece;
    std::istringstream ss(t);
    while (std::getline(ss, piece, ','))
      if (!piece.empty()) p.push_back(Int(piece));
  }
  if (static_cast<int>(p.size()) != dim)
    throw std::runtime_error("expected " + std::to_string(dim) +
                             " coordinates, got " + std::to_string(p.size()));
  return p;
}

void describe_verdict(const IcVerdict& v, CommandResult& res) {
  res.add("verdict", v.is_ic ? "integrally-convex" : "not-integrally-convex");
  if (v.set_witness) {
    res.add("witness-point", vec_to_string(v.set_witness->point));
    res.witness.push_back("the point lies in conv(S) but escapes conv(S cap N(x))");
  }
  if (v.pair_witness) {
    const auto& w = *v.pair_witness;
    res.add("witness-x", zpoint_to_string(w.x));
    res.add("witness-y", zpoint_to_string(w.y));
    res.add("witness-midpoint", vec_to_string(w.midpoint));
    res.add("extension-value", w.extension_value.str());
    res.add("pair-average", rat_to_string(w.pair_average));
  }
}

int cmd_check(const std::string& file, const std::string& kind, bool json) {
  CommandResult res;
  const Instance inst = load_instance(file);
  const bool is_fn = std::holds_alternative<ZFunction>(inst);
  if (!kind.empty() && kind != (is_fn ? "fn" : "set"))
    throw std::runtime_error("file holds a " + std::string(is_fn ? "fn" : "set") +
                             " but --kind requested " + kind);
  res.add("kind", is_fn ? "fn" : "set");
  IcVerdict v;
  if (is_fn) {
    const auto& f = std::get<ZFunction>(inst);
    res.add("dim", std::to_string(f.dim));
    res.add("points", std::to_string(f.table.size()));
    v = is_integrally_convex_function(f);
  } else {
    const auto& s = std::get<ZSet>(inst);
    res.add("dim", std::to_string(s.dim));
    res.add("points", std::to_string(s.points.size()));
    v = is_integrally_convex_set(s);
  }
  describe_verdict(v, res);
  res.status = v.is_ic ? Status::Ok : Status::Violation;
  return render(res, json);
}

int cmd_subgrad(const std::string& file, const std::vector<std::string>& at,
                bool trace, const std::vector<int>& order, bool json) {
  CommandResult res;
  const Instance inst = load_instance(file);
  const ZFunction f = std::holds_alternative<ZFunction>(inst)
                          ? std::get<ZFunction>(inst)
                          : indicator(std::get<ZSet>(inst));
  const ZPoint x = parse_point(at, f.dim);
  res.add("at", zpoint_to_string(x));

  const auto verdict = is_integrally_convex_function(f);
  if (!verdict.is_ic) {
    res.status = Status::Error;
    res.add("error", "input is not integrally convex");
    describe_verdict(verdict, res);
    const auto dec = integral_subdifferential_nonempty(f, x);
    if (dec.nonempty) {
      res.add("note", "an integer subgradient still exists at this point");
      res.add("p", zpoint_to_string(dec.certificate->p));
    } else {
      res.add("integer-subdifferential", "empty");
      std::istringstream proof(dec.proof->str());
      for (std::string line; std::getline(proof, line);) res.witness.push_back(line);
    }
    return render(res, json);
  }

  BackSubstitutionTrace tr;
  const std::vector<int>* ord = order.empty() ? nullptr : &order;
  const auto cert = fm_integer_subgradient(f, x, trace ? &tr : nullptr, ord);
  res.add("p", zpoint_to_string(cert.p));
  res.add("verified-rows", std::to_string(cert.verified_rows));
  if (trace) {
    std::istringstream lines(tr.str());
    for (std::string line; std::getline(lines, line);) res.witness.push_back(line);
  }
  return render(res, json);
}

int cmd_conj(const std::string& file, const std::vector<std::string>& at,
             const std::vector<std::string>& lo, const std::vector<std::string>& hi,
             const std::string& out, int threads, bool json) {
  CommandResult res;
  const Instance inst = load_instance(file);
  const ZFunction f = std::holds_alternative<ZFunction>(inst)
                          ? std::get<ZFunction>(inst)
                          : indicator(std::get<ZSet>(inst));
  if (!at.empty()) {
    const ZPoint p = parse_point(at, f.dim);
    res.add("p", zpoint_to_string(p));
    res.add("value", integral_conjugate(f, p).str());
    return render(res, json);
  }
  if (lo.empty() || hi.empty())
    throw std::runtime_error("conj needs --at or both --lo and --hi");
  const ZPoint plo = parse_point(lo, f.dim), phi = parse_point(hi, f.dim);

  // Materialize the table; grid points are independent, so this is one
  // place the CLI fans out worker threads.
  std::vector<ZPoint> grid;
  for_each_box_point(plo, phi, [&](const ZPoint& p) { grid.push_back(p); });
  std::vector<Int> values(grid.size());
  parallel_for(static_cast<long>(grid.size()), threads,
               [&](long i) { values[i] = integral_conjugate(f, grid[i]); });
  ZFunction table;
  table.dim = f.dim;
  for (std::size_t i = 0; i < grid.size(); ++i) table.table.emplace(grid[i], values[i]);

  const std::string text = serialize_instance(table);
  if (!out.empty()) {
    std::ofstream os(out);
    os << text;
    res.add("written", out);
    res.add("points", std::to_string(table.table.size()));
    return render(res, json);
  }
  std::cout << text;
  return 0;
}

int cmd_biconj(const std::string& file, const std::vector<std::string>& at, bool json) {
  CommandResult res;
  const Instance inst = load_instance(file);
  const ZFunction f = std::holds_alternative<ZFunction>(inst)
                          ? std::get<ZFunction>(inst)
                          : indicator(std::get<ZSet>(inst));
  const ZPoint x = parse_point(at, f.dim);
  const auto r = integral_biconjugate_full(f, x);
  res.add("at", zpoint_to_string(x));
  res.add("value", r.value.is_plus_inf() ? "inf" : rat_to_string(r.value.finite()));
  const ExtVal fx = f.value(x);
  res.add("f-value", fx.is_plus_inf() ? "inf" : rat_to_string(fx.finite()));
  if (r.value.is_finite() && fx.is_finite() && r.value != fx)
    res.add("gap", rat_to_string(fx.finite() - r.value.finite()));
  else if (r.value != fx)
    res.add("note", "biconjugate differs from f at this point");
  if (r.via_subgradient) res.add("certificate", "integer subgradient");
  if (r.attaining_p) res.add("attaining-p", zpoint_to_string(*r.attaining_p));
  if (r.separation) {
    res.add("certificate", "separating direction");
    res.add("direction", zpoint_to_string(r.separation->direction));
  }
  if (r.search_bound > 0) res.add("search-bound", r.search_bound.str());
  return render(res, json);
}

int cmd_dc(const std::string& gfile, const std::string& hfile, bool json) {
  CommandResult res;
  const Instance gi = load_instance(gfile), hi = load_instance(hfile);
  DcInstance inst;
  inst.g = std::holds_alternative<ZFunction>(gi) ? std::get<ZFunction>(gi)
                                                 : indicator(std::get<ZSet>(gi));
  inst.h = std::holds_alternative<ZFunction>(hi) ? std::get<ZFunction>(hi)
                                                 : indicator(std::get<ZSet>(hi));
  const auto rep = toland_singer(inst);
  res.add("primal", rep.primal.str());
  res.add("dual", rep.dual.str());
  res.add("equal", rep.equal ? "true" : "false");
  if (rep.primal_argmin) res.add("primal-argmin", zpoint_to_string(*rep.primal_argmin));
  if (rep.dual_argmin) res.add("dual-argmin", zpoint_to_string(*rep.dual_argmin));
  res.status = rep.equal ? Status::Ok : Status::Violation;
  return render(res, json);
}

int cmd_hull(const std::string& file, bool json) {
  CommandResult res;
  const Instance inst = load_instance(file);
  const ZSet s = std::holds_alternative<ZSet>(inst)
                     ? std::get<ZSet>(inst)
                     : std::get<ZFunction>(inst).domain();
  const auto rep = hull_report(s);
  res.add("vertices", std::to_string(rep.vertices.size()));
  for (const auto& v : rep.vertices) res.witness.push_back("vertex " + vec_to_string(v));
  res.add("all-vertices-integral", rep.all_vertices_integral ? "true" : "false");
  std::string dirs;
  for (const auto& d : rep.edge_primitive_directions) {
    if (!dirs.empty()) dirs += " ";
    dirs += zpoint_to_string(d);
  }
  res.add("edge-directions", dirs);
  res.add("directions-in-pm1", rep.directions_in_pm1 ? "true" : "false");
  res.add("hole-free", rep.hole_free ? "true" : "false");
  res.add("integrally-convex", is_integrally_convex_set(s).is_ic ? "true" : "false");
  return render(res, json);
}

int cmd_minimize(const std::string& file, const std::vector<std::string>& from,
                 bool json) {
  CommandResult res;
  const Instance inst = load_instance(file);
  const ZFunction f = std::holds_alternative<ZFunction>(inst)
                          ? std::get<ZFunction>(inst)
                          : indicator(std::get<ZSet>(inst));
  const auto verdict = is_integrally_convex_function(f);
  if (!verdict.is_ic) {
    res.status = Status::Error;
    res.add("error", "input is not integrally convex; local optima need not be global");
    describe_verdict(verdict, res);
    return render(res, json);
  }
  ZPoint x = from.empty() ? f.table.begin()->first : parse_point(from, f.dim);
  if (!f.in_dom(x)) throw std::runtime_error("start point is outside dom f");
  res.add("start", zpoint_to_string(x));

  // Greedy local descent: each move improves strictly, so this terminates;
  // local optimality certifies the global minimum for IC inputs.
  long steps = 0;
  for (;;) {
    ZPoint best = x;
    Int best_val = f.table.at(x);
    for_each_box_point(ZPoint(f.dim, Int(-1)), ZPoint(f.dim, Int(1)),
                       [&](const ZPoint& d) {
                         const ZPoint y = zadd(x, d);
                         auto it = f.table.find(y);
                         if (it != f.table.end() && it->second < best_val) {
                           best = y;
                           best_val = it->second;
                         }
                       });
    if (best == x) break;
    x = best;
    ++steps;
  }
  res.add("minimizer", zpoint_to_string(x));
  res.add("value", f.table.at(x).str());
  res.add("steps", std::to_string(steps));
  res.add("certified", is_global_minimizer(f, x) ? "true" : "false");
  return render(res, json);
}

int cmd_gen(const std::string& kind, int n, const std::vector<std::string>& lo,
            const std::vector<std::string>& hi, std::uint64_t seed,
            const std::string& out, bool json) {
  CommandResult res;
  const ZPoint plo = parse_point(lo, n), phi = parse_point(hi, n);
  ZFunction f;
  if (kind == "separable") {
    f = gen_separable(n, plo, phi, seed);
  } else if (kind == "lnat") {
    f = gen_lnat_random(n, plo, phi, seed);
  } else {
    const auto r = gen_random_ic(n, plo, phi, Int(-5), Int(5), seed);
    f = r.f;
    res.add("attempts", std::to_string(r.attempts));
  }
  const std::string text = serialize_instance(f);
  if (out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream os(out);
  os << text;
  res.add("written", out);
  res.add("kind", kind);
  res.add("points", std::to_string(f.table.size()));
  res.add("seed", std::to_string(seed));
  return render(res, json);
}

int cmd_corpus_verify(const std::string& dir, int threads, bool json) {
  CommandResult res;
  const auto& entries = corpus();
  std::vector<std::vector<CorpusCheck>> results(entries.size());
  std::vector<std::string> file_errors(entries.size());
  parallel_for(static_cast<long>(entries.size()), threads, [&](long i) {
    const auto& e = entries[i];
    try {
      const Instance on_disk = load_instance(dir + "/" + e.name + ".icx");
      if (serialize_instance(on_disk) != serialize_instance(e.data))
        file_errors[i] = "file does not match the built-in instance";
    } catch (const std::exception& ex) {
      file_errors[i] = ex.what();
    }
    results[i] = verify_corpus_entry(e);
  });
  bool all = true;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!file_errors[i].empty()) {
      all = false;
      res.add(entries[i].name + ".file", "FAIL: " + file_errors[i]);
    }
    for (const auto& c : results[i]) {
      if (c.pass) {
        res.add(entries[i].name + "." + c.key, "ok");
      } else {
        all = false;
        res.add(entries[i].name + "." + c.key,
                "FAIL: expected " + c.expected + ", got " + c.actual);
      }
    }
  }
  res.add("entries", std::to_string(entries.size()));
  res.status = all ? Status::Ok : Status::Violation;
  return render(res, json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for integer-valued integrally convex functions"};
  app.require_subcommand(1);
  bool json = false;
  int threads = 1;
  if (const char* env = std::getenv("ICX_THREADS")) threads = std::atoi(env);
  app.add_flag("--json", json, "structured JSON output");
  app.add_option("--threads", threads, "worker threads for bulk operations");

  std::string file, kind, gfile, hfile, out, dir = "corpus", gen_kind = "separable";
  std::vector<std::string> at, lo, hi, from;
  std::vector<int> order;
  bool trace = false;
  int n = 2;
  std::uint64_t seed = 1;

  auto* check = app.add_subcommand("check", "integral convexity of a set or function");
  check->add_option("file", file)->required();
  check->add_option("--kind", kind)->check(CLI::IsMember({"set", "fn"}));

  auto* subgrad = app.add_subcommand("subgrad", "integer subgradient by elimination");
  subgrad->add_option("file", file)->required();
  subgrad->add_option("--at", at, "anchor point")->required()->expected(-1);
  subgrad->add_flag("--trace", trace, "print the back-substitution trace");
  subgrad->add_option("--order", order, "elimination order permutation")->expected(-1);

  auto* conj = app.add_subcommand("conj", "integral conjugate values and tables");
  conj->add_option("file", file)->required();
  conj->add_option("--at", at, "price vector")->expected(-1);
  conj->add_option("--lo", lo, "table box lower corner")->expected(-1);
  conj->add_option("--hi", hi, "table box upper corner")->expected(-1);
  conj->add_option("--out", out, "write the table to a file");

  auto* biconj = app.add_subcommand("biconj", "integral biconjugate with certificate");
  biconj->add_option("file", file)->required();
  biconj->add_option("--at", at)->required()->expected(-1);

  auto* dc = app.add_subcommand("dc", "difference duality for a function pair");
  dc->set_help_flag("--help", "print help");  // frees -h for the h-function option
  dc->add_option("--g", gfile)->required();
  dc->add_option("--h", hfile)->required();

  auto* hull = app.add_subcommand("hull", "hull vertices, edge directions, holes");
  hull->add_option("file", file)->required();

  auto* minimize = app.add_subcommand("minimize", "certified minimization by local moves");
  minimize->add_option("file", file)->required();
  minimize->add_option("--from", from, "start point")->expected(-1);

  auto* gen = app.add_subcommand("gen", "generate a verified instance");
  gen->add_option("--kind", gen_kind)->check(CLI::IsMember({"separable", "lnat", "random"}));
  gen->add_option("--n", n)->required();
  gen->add_option("--lo", lo)->required()->expected(-1);
  gen->add_option("--hi", hi)->required()->expected(-1);
  gen->add_option("--seed", seed);
  gen->add_option("--out", out);

  auto* cv = app.add_subcommand("corpus-verify", "recheck the bundled corpus");
  cv->add_option("--dir", dir, "corpus directory");

  // Global flags (--json, --threads) may follow the subcommand.
  for (auto* sc : {check, subgrad, conj, biconj, dc, hull, minimize, gen, cv})
    sc->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(file, kind, json);
    if (subgrad->parsed()) return cmd_subgrad(file, at, trace, order, json);
    if (conj->parsed()) return cmd_conj(file, at, lo, hi, out, threads, json);
    if (biconj->parsed()) return cmd_biconj(file, at, json);
    if (dc->parsed()) return cmd_dc(gfile, hfile, json);
    if (hull->parsed()) return cmd_hull(file, json);
    if (minimize->parsed()) return cmd_minimize(file, from, json);
    if (gen->parsed()) return cmd_gen(gen_kind, n, lo, hi, seed, out, json);
    if (cv->parsed()) return cmd_corpus_verify(dir, threads, json);
  } catch (const std::exception& e) {
    CommandResult res;
    res.status = Status::Error;
    res.add("error", e.what());
    return render(res, json);
  }
  return 2;
}
