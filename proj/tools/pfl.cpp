/*
 * Copyright 2026 The pfl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// pfl: characteristic polynomials, determinants, adjugates, Pfaffians and
// Pfaff-adjugates of matrix files; benchmark harness; Euler-form demo.
//
// Exit codes: 0 ok, 1 unexpected failure, 2 parse or usage error,
// 3 validation error, 4 internal consistency error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pfl/pfl.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace pfl;

enum ExitCode { kOk = 0, kFailure = 1, kParse = 2, kValidation = 3, kConsistency = 4 };

struct ComputeFlags {
  std::string command;
  std::string path;
  std::optional<std::string> ring;
  std::string j_form = "standard";
  bool skew_symmetrize = false;
  std::optional<double> tolerance;
  unsigned threads = 1;
  bool json = false;
};

template <typename F>
decltype(auto) with_ring(const RingSpec& spec, F&& f) {
  switch (spec.kind) {
    case RingKind::rational: return f(Rational{});
    case RingKind::integer: return f(RationalizedInteger{});
    case RingKind::floating: return f(double{});
    case RingKind::polynomial: return f(Polynomial{});
    case RingKind::exterior: return f(Form<Rational>{});
  }
  throw std::logic_error("unknown ring kind");
}

JForm parse_j_form(const std::string& s) {
  if (s == "standard") return JForm::standard;
  if (s == "alternative") return JForm::alternative;
  throw ParseError("unknown J form '" + s + "'");
}

template <QAlgebra T>
json matrix_json(const Matrix<T>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(EntryCodec<T>::format(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <QAlgebra T>
json values_json(const std::vector<T>& v) {
  json out = json::array();
  for (const T& x : v) out.push_back(EntryCodec<T>::format(x));
  return out;
}

template <QAlgebra T>
std::string join(const std::vector<T>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += EntryCodec<T>::format(v[i]);
  }
  return out;
}

template <QAlgebra T>
SkewMatrix<T> as_skew(Matrix<T> m, const ComputeFlags& flags) {
  if (flags.skew_symmetrize) m = skew_symmetrize(m);
  if constexpr (std::same_as<T, double>) {
    if (flags.tolerance) return SkewMatrix<double>::validate(std::move(m), *flags.tolerance);
  }
  return SkewMatrix<T>::validate(std::move(m));
}

template <QAlgebra T>
int run_compute(const ComputeFlags& flags, const MatrixFile& file, const RingSpec& spec) {
  const Matrix<T> a = entries_as<T>(file.entries, file.size, spec);
  json doc{{"command", flags.command}, {"ring", spec.tag()}, {"n", file.size}};
  std::string text;

  if (flags.command == "charpoly" || flags.command == "det" || flags.command == "adjugate") {
    const CharPolyResult<T> r = char_poly(a, {.threads = flags.threads});
    if (r.residual_max_abs) doc["residual_max_abs"] = *r.residual_max_abs;
    if (flags.command == "charpoly") {
      doc["coefficients"] = values_json(r.coefficients);
      text = join(r.coefficients) + "\n";
    } else if (flags.command == "det") {
      const T det = determinant(a, {.threads = flags.threads});
      doc["determinant"] = EntryCodec<T>::format(det);
      text = EntryCodec<T>::format(det) + "\n";
    } else {
      doc["adjugate"] = matrix_json(r.adjugate);
      text = format_matrix(spec, r.adjugate);
    }
  } else {
    const SkewMatrix<T> s = as_skew(a, flags);
    const PfaffianResult<T> r = pfaffian_fl(s, {.j_form = parse_j_form(flags.j_form), .threads = flags.threads});
    doc["j_form"] = to_string(r.j_form);
    if (r.odd_dimension) doc["odd_dimension"] = true;
    if (r.residual_max_abs) doc["residual_max_abs"] = *r.residual_max_abs;
    if (flags.command == "pfaffian") {
      doc["pfaffian"] = EntryCodec<T>::format(r.value);
      doc["psi_coefficients"] = values_json(r.psi_coefficients);
      text = EntryCodec<T>::format(r.value) + "\n";
    } else {
      if (r.odd_dimension) throw ValidationError("Pfaff-adjugate is undefined for odd n");
      doc["pfaff_adjugate"] = matrix_json(r.pfaff_adjugate);
      text = format_matrix(spec, r.pfaff_adjugate);
    }
  }
  std::cout << (flags.json ? doc.dump(2) + "\n" : text);
  return kOk;
}

int cmd_compute(const ComputeFlags& flags) {
  const MatrixFile file = load_matrix_file(flags.path);
  const RingSpec spec = flags.ring ? RingSpec::parse(*flags.ring) : file.ring;
  return with_ring(spec, [&](auto tag) { return run_compute<decltype(tag)>(flags, file, spec); });
}

struct BenchFlags {
  std::vector<std::size_t> sizes;
  std::string ring = "rational";
  std::vector<std::string> algorithms{"fl", "matchings"};
  unsigned reps = 3;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool override_caps = false;
  bool json = false;
};

int cmd_bench(const BenchFlags& flags) {
  BenchConfig config;
  config.sizes = flags.sizes;
  config.ring = RingSpec::parse(flags.ring).kind;
  config.algorithms.clear();
  for (const std::string& a : flags.algorithms) config.algorithms.push_back(parse_bench_algorithm(a));
  config.reps = flags.reps;
  config.seed = flags.seed;
  config.threads = flags.threads;
  config.override_caps = flags.override_caps;

  const std::vector<BenchRecord> records = run_bench(config);
  if (flags.json) {
    json rows = json::array();
    for (const BenchRecord& r : records)
      rows.push_back({{"algorithm", r.algorithm}, {"n", r.n}, {"ring", r.ring},
                      {"seconds", r.refused() ? json(nullptr) : json(r.seconds)}, {"reps", r.reps},
                      {"digest", r.digest},
                      {"mean_seconds", r.refused() ? json(nullptr) : json(r.mean_seconds)},
                      {"threads", r.threads}});
    const json doc{{"prng", SkewIntegerGenerator::kAlgorithm}, {"seed", config.seed}, {"records", rows}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << bench_csv(records, config);
  }
  int status = kOk;
  for (const BenchRecord& r : records)
    if (r.refused()) {
      std::cerr << "pfl: " << r.algorithm << " refused n = " << r.n << " (cap "
                << bench_cap(parse_bench_algorithm(r.algorithm)) << "; pass --override-caps)\n";
      status = kValidation;
    }
  return status;
}

struct EulerFlags {
  std::string source;
  unsigned threads = 1;
  bool json = false;
};

int cmd_euler(const EulerFlags& flags) {
  json doc;
  std::ostringstream text;
  if (flags.source == "s2" || flags.source == "s4") {
    const unsigned n = flags.source == "s2" ? 2 : 4;
    const GaussBonnetReport rep = gauss_bonnet_check(n);
    const EulerFormResult<Rational> euler = euler_form(unit_sphere_curvature<Rational>(n), flags.threads);
    doc = {{"example", flags.source}, {"euler_form", euler.form.to_string()},
           {"top_coefficient", rep.top_coefficient.to_string()}, {"volume", rep.volume},
           {"integral", rep.integral}, {"expected", rep.expected},
           {"relative_difference", rep.relative_difference}};
    text.precision(17);
    text << "euler form: " << euler.form.to_string() << "\n"
         << "top coefficient: " << rep.top_coefficient.to_string() << "\n"
         << "volume: " << rep.volume << "\n"
         << "integral: " << rep.integral << "\n"
         << "expected (2 pi)^" << n / 2 << " * 2: " << rep.expected << "\n"
         << "relative difference: " << rep.relative_difference << "\n";
  } else {
    const MatrixFile file = load_matrix_file(flags.source);
    if (file.ring.kind != RingKind::exterior)
      throw ValidationError("curvature file must use ring exterior:<n>");
    if (file.ring.dimension != file.size)
      throw ValidationError("exterior dimension " + std::to_string(file.ring.dimension) +
                            " does not match matrix size " + std::to_string(file.size));
    CurvatureInput<Rational> input{
        SkewMatrix<Form<Rational>>::validate(matrix_as<Form<Rational>>(file)), std::nullopt,
        FrameKind::orthonormal, file.volume};
    if (file.gram) {
      input.gram = entries_as<Rational>(*file.gram, file.size, RingSpec{RingKind::rational});
      input.frame = FrameKind::general;
    }
    const EulerFormResult<Rational> euler = euler_form(input, flags.threads);
    doc = {{"source", flags.source}, {"frame", input.frame == FrameKind::general ? "general" : "orthonormal"},
           {"euler_form", euler.form.to_string()}, {"top_coefficient", euler.top_coefficient.to_string()}};
    text.precision(17);
    text << "euler form: " << euler.form.to_string() << "\n"
         << "top coefficient: " << euler.top_coefficient.to_string() << "\n";
    if (euler.gauss_bonnet_integral) {
      doc["volume"] = *input.volume;
      doc["integral"] = *euler.gauss_bonnet_integral;
      text << "volume: " << *input.volume << "\n"
           << "integral: " << *euler.gauss_bonnet_integral << "\n";
    }
  }
  std::cout << (flags.json ? doc.dump(2) + "\n" : text.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Division-free characteristic polynomials and Pfaffians"};
  app.require_subcommand(1);

  ComputeFlags compute;
  for (const char* name : {"charpoly", "det", "adjugate", "pfaffian", "padj"}) {
    CLI::App* sub = app.add_subcommand(name, std::string("compute ") + name + " of a matrix file");
    sub->add_option("input", compute.path, "matrix file")->required();
    sub->add_option("--ring", compute.ring, "override the file's ring tag");
    sub->add_option("--threads", compute.threads, "worker threads for matrix products")->check(CLI::Range(1U, 256U));
    sub->add_flag("--json", compute.json, "JSON output");
    sub->add_option("--tolerance", compute.tolerance, "skew tolerance for float input")->check(CLI::NonNegativeNumber);
    if (std::string(name) == "pfaffian" || std::string(name) == "padj") {
      sub->add_option("--j-form", compute.j_form, "standard | alternative")
          ->check(CLI::IsMember({"standard", "alternative"}));
      sub->add_flag("--skew-symmetrize", compute.skew_symmetrize, "replace A by (A - A^T)/2");
    }
    sub->callback([&compute, sub] { compute.command = sub->get_name(); });
  }

  BenchFlags bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "time Pfaffian algorithms on seeded random skew matrices");
  bench_cmd->add_option("--sizes", bench.sizes, "matrix sizes")->required()->delimiter(',');
  bench_cmd->add_option("--ring", bench.ring, "rational | integer | float");
  bench_cmd->add_option("--algorithms", bench.algorithms, "subset of fl,matchings,laplace")->delimiter(',');
  bench_cmd->add_option("--reps", bench.reps, "repetitions per row")->check(CLI::Range(1U, 100000U));
  bench_cmd->add_option("--seed", bench.seed, "PRNG seed");
  bench_cmd->add_option("--threads", bench.threads, "worker threads")->check(CLI::Range(1U, 256U));
  bench_cmd->add_flag("--override-caps", bench.override_caps, "run matchings/laplace above their size caps");
  bench_cmd->add_flag("--json", bench.json, "JSON output");

  EulerFlags euler;
  CLI::App* euler_cmd = app.add_subcommand("euler", "Euler form of S^2, S^4 or a curvature file");
  euler_cmd->add_option("source", euler.source, "s2 | s4 | curvature file")->required();
  euler_cmd->add_option("--threads", euler.threads, "worker threads")->check(CLI::Range(1U, 256U));
  euler_cmd->add_flag("--json", euler.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (bench_cmd->parsed()) return cmd_bench(bench);
    if (euler_cmd->parsed()) return cmd_euler(euler);
    return cmd_compute(compute);
  } catch (const ParseError& e) {
    std::cerr << "pfl: parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ValidationError& e) {
    std::cerr << "pfl: validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const ConsistencyError& e) {
    std::cerr << "pfl: internal consistency error: " << e.what() << "\n";
    return kConsistency;
  } catch (const std::invalid_argument& e) {
    std::cerr << "pfl: invalid argument: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "pfl: " << e.what() << "\n";
    return kFailure;
  }
}
