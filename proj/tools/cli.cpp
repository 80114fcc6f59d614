// Copyright 2026 The cjones Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "cjones/invariant.hpp"
#include "cjones/oracle.hpp"
#include "cjones/qcircuit.hpp"
#include "json.hpp"

namespace cjones::cli {

using ojson = nlohmann::ordered_json;
using cd = std::complex<double>;

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%#.17g", x);
  return buf;
}

// nlohmann prints the shortest round-trip form; the output contract asks
// for 17 significant digits (trailing zeros kept), so floats are written by hand.
void write_json(std::ostream& os, const ojson& j, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(indent * depth), ' ');
  switch (j.type()) {
    case ojson::value_t::number_float: {
      const double x = j.get<double>();
      os << (std::isfinite(x) ? fmt17(x) : "null");
      return;
    }
    case ojson::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) os << ",\n";
        first = false;
        os << pad << ojson(k).dump() << ": ";
        write_json(os, v, indent, depth + 1);
      }
      os << "\n" << close << "}";
      return;
    }
    case ojson::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      const bool flat = std::none_of(j.begin(), j.end(), [](const ojson& e) { return e.is_structured(); });
      if (flat) {
        os << "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) os << ", ";
          write_json(os, j[i], indent, depth + 1);
        }
        os << "]";
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ",\n";
        os << pad;
        write_json(os, j[i], indent, depth + 1);
      }
      os << "\n" << close << "]";
      return;
    }
    default:
      os << j.dump();
  }
}

ojson cjson(cd z) { return ojson{{"re", z.real()}, {"im", z.imag()}}; }

struct Globals {
  int k = -1;
  bool conjugate_q = false;
  bool rt_shift = false;
  double tolerance = 1e-9;
  int threads = 1;
  std::string out;
};

struct InputOpts {
  std::string input;
  std::string link;
  int color = 1;
};

RootOfUnity root_of(const Globals& g) {
  if (g.k < 0) throw InputError("--k: a level k >= 1 is required for this command");
  return RootOfUnity(g.k, g.conjugate_q);
}

ojson header(const std::string& command, const Globals& g) {
  ojson h;
  h["command"] = command;
  if (g.k >= 0) h["k"] = g.k;
  h["q_convention"] = g.conjugate_q ? "exp(-2 pi i/(k+2))" : "exp(+2 pi i/(k+2))";
  h["library_version"] = builtin_library().version;
  return h;
}

std::string read_all(std::istream& is) {
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

ColoredBraidWord load_word(const InputOpts& o, std::optional<int> level, std::istream& in) {
  if (!o.link.empty()) {
    if (!o.input.empty()) throw InputError("--link and --input are mutually exclusive");
    const auto& e = builtin_library().get(o.link);
    if (o.color < 0) throw InputError("--color: must be a non-negative twice-spin");
    auto w = library_word(e, o.color);
    validate_word(w, level);
    return w;
  }
  std::string text;
  if (!o.input.empty()) {
    std::ifstream f(o.input);
    if (!f) throw InputError("--input: cannot open '" + o.input + "'");
    text = read_all(f);
  } else {
    text = read_all(in);
  }
  return parse_word(text, level);
}

std::vector<int> framings_of(const ColoredBraidWord& w) {
  if (!w.framings.empty()) return w.framings;
  return std::vector<int>(static_cast<std::size_t>(components(w).n_components), 0);
}

void add_input_options(CLI::App* sub, InputOpts& o) {
  sub->add_option("--input,-i", o.input, "Braid JSON file (default: stdin)");
  sub->add_option("--link", o.link, "Library link name instead of JSON input");
  sub->add_option("--color", o.color, "Twice-spin placed on every component of --link")->capture_default_str();
}

ojson word_json(const ColoredBraidWord& w) { return ojson::parse(serialize_word(w)); }

// ---- compute ----

ojson cmd_compute(const Globals& g, const InputOpts& io, std::istream& in) {
  const auto root = root_of(g);
  const auto w = load_word(io, g.k, in);
  const auto r = colored_jones(w, root);
  auto j = header("compute", g);
  j["input"] = word_json(w);
  j["V"] = cjson(r.V);
  j["J"] = cjson(r.J);
  j["E"] = cjson(r.E);
  j["expectation"] = cjson(r.expectation);
  j["writhe"] = r.writhe;
  ojson spins = ojson::array();
  for (const auto& s : r.colors) spins.push_back(s.twice);
  j["component_colors_twice"] = spins;
  return j;
}

// ---- sample ----

struct SampleOpts {
  double delta = 0.1;
  double confidence = 0.75;
  double variance = 1.0;
  long long shots = 0;
  std::uint64_t seed = 0;
  std::string component = "re";
  bool exact = false;
};

ojson sample_one(const ColoredBraidWord& w, const RootOfUnity& root, Component c, const SampleOpts& so,
                 std::uint64_t seed) {
  SamplePlan plan{so.delta, so.variance, so.confidence, so.shots, seed};
  const auto r = hadamard_test(w, root, c, plan);
  ojson j;
  j["estimate"] = r.estimate;
  j["shots"] = r.shots;
  j["seed"] = seed;
  j["raw_counts"] = ojson{{"0", r.plus}, {"1", r.minus}};
  if (so.exact) {
    const cd e = plat_expectation(w, root);
    j["exact"] = c == Component::re ? e.real() : e.imag();
  }
  return j;
}

ojson cmd_sample(const Globals& g, const InputOpts& io, const SampleOpts& so, std::istream& in) {
  const auto root = root_of(g);
  const auto w = load_word(io, g.k, in);
  auto j = header("sample", g);
  j["input"] = word_json(w);
  j["delta"] = so.delta;
  j["confidence"] = so.confidence;
  j["variance"] = so.variance;
  j["component"] = so.component;
  if (so.component == "re") {
    j.update(sample_one(w, root, Component::re, so, so.seed));
  } else if (so.component == "im") {
    j.update(sample_one(w, root, Component::im, so, so.seed));
  } else {
    // Imaginary part uses the next seed so the two runs are independent.
    j["seed"] = so.seed;
    j["re"] = sample_one(w, root, Component::re, so, so.seed);
    j["im"] = sample_one(w, root, Component::im, so, so.seed + 1);
    j["estimate"] = ojson{{"re", j["re"]["estimate"]}, {"im", j["im"]["estimate"]}};
    j["shots"] = j["re"]["shots"];
  }
  return j;
}

// ---- rt ----

ojson cmd_rt(const Globals& g, const InputOpts& io, bool terms, std::istream& in) {
  const auto root = root_of(g);
  const auto w = load_word(io, g.k, in);
  RTOptions opts;
  opts.rt_shift = g.rt_shift;
  opts.threads = g.threads;
  opts.keep_terms = terms;
  const auto f = framings_of(w);
  const auto r = rt_invariant(w, f, root, opts);
  auto j = header("rt", g);
  j["rt_shift"] = g.rt_shift;
  j["input"] = word_json(w);
  j["framings"] = f;
  j["tau"] = cjson(r.tau);
  j["alpha"] = cjson(r.alpha);
  j["b"] = r.b;
  j["c"] = cjson(r.c);
  j["k_used"] = r.k_used;
  j["sigma"] = r.sigma;
  j["components"] = r.n_components;
  if (terms) {
    ojson arr = ojson::array();
    for (const auto& t : r.terms) arr.push_back(ojson{{"colors_twice", t.colors_twice}, {"weight", t.weight}, {"E", cjson(t.E)}});
    j["terms"] = arr;
  }
  return j;
}

// ---- volscan ----

struct VolOpts {
  std::string knot = "fig8";
  int nmin = 2;
  int nmax = 30;
  int kaul_max = 10;
  std::string csv;
};

ojson cmd_volscan(const Globals& g, const VolOpts& vo) {
  const std::string name = vo.knot == "fig8" ? "figure-eight" : vo.knot;
  const auto& knot = builtin_library().get(name);
  if (vo.nmin < 2) throw InputError("--nmin: must be at least 2");
  if (vo.nmax < vo.nmin) throw InputError("--nmax: must be at least --nmin");
  VolumeOptions opts;
  opts.max_kaul_n = vo.kaul_max;
  const int count = vo.nmax - vo.nmin + 1;
  std::vector<VolumePoint> pts(static_cast<std::size_t>(count));
  std::vector<std::exception_ptr> errs(static_cast<std::size_t>(count));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        pts[i] = volume_ratio(knot, vo.nmin + i, opts);
      } catch (...) {
        errs[i] = std::current_exception();
      }
    }
  };
  const int nt = std::clamp(g.threads, 1, count);
  std::vector<std::thread> pool;
  for (int t = 1; t < nt; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& e : errs) {
    if (e) std::rethrow_exception(e);
  }

  auto j = header("volscan", g);
  j["knot"] = name;
  const double vol = fig8_volume();
  if (name == "figure-eight") j["volume"] = vol;
  ojson arr = ojson::array();
  for (const auto& p : pts) {
    arr.push_back(ojson{{"N", p.n}, {"J_N", cjson(p.j_n)}, {"abs_J_N", p.abs_j}, {"ratio", p.ratio}, {"method", p.method}});
  }
  j["points"] = arr;
  if (!vo.csv.empty()) {
    std::ofstream f(vo.csv);
    if (!f) throw InputError("--csv: cannot write '" + vo.csv + "'");
    f << "N,abs_J_N,ratio\n";
    for (const auto& p : pts) f << p.n << "," << fmt17(p.abs_j) << "," << fmt17(p.ratio) << "\n";
    j["csv"] = vo.csv;
  }
  return j;
}

// ---- basis ----

ojson cmd_basis(const Globals& g, const InputOpts& io, const std::string& coupling, std::istream& in) {
  const auto root = root_of(g);
  const auto w = load_word(io, g.k, in);
  if (coupling != "odd" && coupling != "even") throw InputError("--coupling: expected odd or even");
  const auto b = enumerate_basis(w.bottom(), g.k, coupling == "odd" ? Coupling::odd : Coupling::even);
  auto j = header("basis", g);
  j["colors_twice"] = w.bottom().twice_values();
  j["coupling"] = coupling;
  j["dim"] = b.dim();
  ojson arr = ojson::array();
  for (const auto& l : b.labels()) arr.push_back(ojson{{"p", l.p}, {"r", l.r}});
  j["labels"] = arr;
  (void)root;
  return j;
}

// ---- verify ----

struct Check {
  std::string name;
  bool pass;
  double error;
  double tolerance;
};

double max_abs(const CMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

std::vector<Check> run_verify(const Globals& g) {
  std::vector<Check> out;
  const double tol = g.tolerance;
  const auto& lib = builtin_library();

  for (const auto& e : lib.entries) {
    for (int k : {3, 4, 5, 8}) {
      const RootOfUnity root(k, g.conjugate_q);
      const auto w = library_word(e, 1);
      const double err = std::abs(colored_jones(w, root).J - jones_at(w, root));
      out.push_back({"jones vs bracket: " + e.name + " k=" + std::to_string(k), err <= tol, err, tol});
    }
    const auto w = library_word(e, 1);
    LaurentPoly frozen;
    for (const auto& [ex, c] : e.jones) frozen += LaurentPoly::monomial(ex, c);
    const bool same = jones_polynomial(w) == frozen;
    out.push_back({"library polynomial: " + e.name, same, same ? 0.0 : 1.0, 0.0});
  }

  for (int k : {2, 3, 4}) {
    const RootOfUnity root(k, g.conjugate_q);
    for (const auto& tw : std::vector<std::vector<int>>{{1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}, {2, 2, 2, 2, 2, 2}, {1, 2, 1, 2}}) {
      PunctureColors c = PunctureColors::from_twice(tw);
      double err = 0.0;
      try {
        err = max_abs(full_duality_matrix(c, root).entries - tree_recoupling_oracle(c, root).entries);
      } catch (const NotPlatCompatible&) {
        continue;
      }
      std::string label;
      for (int t : tw) label += std::to_string(t);
      out.push_back({"duality vs tree oracle: colors " + label + " k=" + std::to_string(k), err <= tol, err, tol});
    }
  }

  for (const auto& e : lib.entries) {
    for (int k : {3, 4}) {
      const RootOfUnity root(k, g.conjugate_q);
      const auto w = library_word(e, 1);
      if (w.empty_link()) continue;
      const auto dense = represent_word(w, root);
      const auto gl = compile_word(w, root);
      const double err = max_abs(circuit_block_matrix(gl, *dense.basis_in, *dense.basis_out) - dense.entries);
      out.push_back({"circuit vs dense: " + e.name + " k=" + std::to_string(k), err <= 1e-8, err, 1e-8});
    }
  }

  const auto& fig8 = lib.get("figure-eight");
  for (int n = 2; n <= 8; ++n) {
    const cd kaul = kaul_volume_point(fig8, n);
    const cd orc = fig8_colored_jones_angle(n, 2.0 * kPi / n);
    const double err = std::abs(kaul - orc) / std::max(1.0, std::abs(orc));
    out.push_back({"fig8 Kaul path vs closed form: N=" + std::to_string(n), err <= 1e-6, err, 1e-6});
  }

  {
    const auto w = library_word(fig8, 1);
    std::vector<int> order(w.letters.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(order.size() - 1 - i);
    const bool same = kauffman_bracket(w) == kauffman_bracket(w, order);
    out.push_back({"bracket order independence: figure-eight", same, same ? 0.0 : 1.0, 0.0});
  }
  return out;
}

void emit(const ojson& j, const Globals& g, std::ostream& out) {
  if (g.out.empty()) {
    write_json(out, j, 2, 0);
    out << "\n";
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw InputError("--out: cannot write '" + g.out + "'");
  write_json(f, j, 2, 0);
  f << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coloured Jones polynomials and related invariants of plat-closed braids"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file with the same keys as the flags; flags win");

  Globals g;
  app.add_option("--k", g.k, "Chern-Simons level k");
  app.add_flag("--conjugate-q", g.conjugate_q, "Use q = exp(-2 pi i/(k+2))");
  app.add_flag("--rt-shift", g.rt_shift, "Use k+2 in the RT constants b and c");
  app.add_option("--tolerance", g.tolerance, "Tolerance for verify")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads for rt and volscan")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--out,-o", g.out, "Write output here instead of stdout");

  InputOpts io;
  auto* compute = app.add_subcommand("compute", "Exact V and J from the dense representation");
  add_input_options(compute, io);

  SampleOpts so;
  auto* sample = app.add_subcommand("sample", "Hadamard-test estimate of <0|K|0>");
  add_input_options(sample, io);
  sample->add_option("--delta", so.delta, "Target additive error")->capture_default_str();
  sample->add_option("--confidence", so.confidence, "Target confidence")->capture_default_str();
  sample->add_option("--variance", so.variance, "Variance bound v")->capture_default_str();
  sample->add_option("--shots", so.shots, "Override the Chernoff shot count");
  sample->add_option("--seed", so.seed, "RNG seed")->capture_default_str();
  sample->add_option("--component", so.component, "re, im or both")
      ->capture_default_str()
      ->check(CLI::IsMember({"re", "im", "both"}));
  sample->add_flag("--exact", so.exact, "Also report the exact value");

  bool terms = false;
  auto* rt = app.add_subcommand("rt", "Reshetikhin-Turaev invariant of the surgery manifold");
  add_input_options(rt, io);
  rt->add_flag("--terms", terms, "Include every colour assignment in the output");

  VolOpts vo;
  auto* volscan = app.add_subcommand("volscan", "2 pi log|J_N| / N against N");
  volscan->add_option("--knot", vo.knot, "Library knot (fig8 is accepted)")->capture_default_str();
  volscan->add_option("--nmin", vo.nmin, "Smallest N")->capture_default_str();
  volscan->add_option("--nmax", vo.nmax, "Largest N")->capture_default_str();
  volscan->add_option("--kaul-max", vo.kaul_max, "Largest N evaluated on the representation path")->capture_default_str();
  volscan->add_option("--csv", vo.csv, "Also write N,|J_N|,ratio here");

  auto* verify = app.add_subcommand("verify", "Oracle cross-checks; nonzero exit on any failure");

  std::string coupling = "odd";
  auto* basis = app.add_subcommand("basis", "List the conformal-block basis of the bottom colours");
  add_input_options(basis, io);
  basis->add_option("--coupling", coupling, "odd or even")->capture_default_str();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*compute) {
      emit(cmd_compute(g, io, in), g, out);
    } else if (*sample) {
      emit(cmd_sample(g, io, so, in), g, out);
    } else if (*rt) {
      emit(cmd_rt(g, io, terms, in), g, out);
    } else if (*volscan) {
      emit(cmd_volscan(g, vo), g, out);
    } else if (*basis) {
      emit(cmd_basis(g, io, coupling, in), g, out);
    } else if (*verify) {
      const auto checks = run_verify(g);
      int failed = 0;
      std::ostringstream table;
      for (const auto& c : checks) {
        failed += !c.pass;
        char line[64];
        std::snprintf(line, sizeof line, "  err=%.3e tol=%.1e", c.error, c.tolerance);
        table << (c.pass ? "PASS  " : "FAIL  ") << c.name << line << "\n";
      }
      table << checks.size() - failed << "/" << checks.size() << " checks passed\n";
      if (g.out.empty()) {
        out << table.str();
      } else {
        std::ofstream f(g.out);
        f << table.str();
      }
      return failed ? kExitVerifyFailed : kExitOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace cjones::cli
