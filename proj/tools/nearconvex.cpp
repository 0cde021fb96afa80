// Copyright 2026 The nearconvex Authors.
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

// nearconvex: command-line front end for the triangulation counting library.
//
// Exit status: 0 success, 1 conjecture counterexample, 2 malformed input,
// 3 input over the enumeration cap, 4 inconclusive oracle, 5 internal error.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "nearconvex/checks.h"
#include "nearconvex/io.h"
#include "nearconvex/nearly_convex.h"
#include "nearconvex/weakly_convex.h"

namespace nc = nearconvex;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kCounterexample = 1, kBadInput = 2, kOverCap = 3, kInconclusive = 4,
            kInternal = 5 };

struct OverCap : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::optional<unsigned long> cap;
  std::string action;
  std::string weights;
  std::vector<std::string> files;
  unsigned long bound = 0;
};

unsigned long cap_or(const Options& o, unsigned long fallback) { return o.cap.value_or(fallback); }

void enforce_cap(unsigned long value, unsigned long cap, const std::string& what) {
  if (value > cap)
    throw OverCap(what + " " + std::to_string(value) + " exceeds the cap " + std::to_string(cap) +
                  " (raise it with --cap)");
}

void print_value(const Options& o, const nc::BigInt& v) {
  if (o.json)
    std::cout << json{{"value", nc::to_string(v)}}.dump() << "\n";
  else
    std::cout << v << "\n";
}

template <typename Poly>
void print_poly(const Options& o, const Poly& p) {
  if (o.json)
    std::cout << nc::to_json(p).dump() << "\n";
  else
    std::cout << p.to_string() << "\n";
}

nc::NearEdge load_near_edge(const std::string& path, unsigned long cap) {
  std::vector<nc::Point> pts = nc::read_points_file(path);
  nc::NearEdge e = [&] {
    try {
      return nc::NearEdge(std::move(pts));
    } catch (const std::invalid_argument& err) {
      throw nc::ParseError(path + ": " + err.what());
    }
  }();
  enforce_cap(e.weight(), cap, path + ": near-edge weight");
  return e;
}

int cmd_weights(const Options& o) {
  nc::WeightSequence w = [&] {
    try {
      return nc::WeightSequence(nc::parse_weights(o.weights));
    } catch (const std::invalid_argument& err) {
      throw nc::ParseError(err.what());
    }
  }();
  if (o.action == "tau-max")
    print_value(o, nc::tau_max(w));
  else if (o.action == "incl-excl")
    print_value(o, nc::tau_max_inclusion_exclusion(w));
  else
    print_poly(o, nc::triangulation_poly(w));
  return kOk;
}

std::string index_list(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

int cmd_near_edge(const Options& o) {
  const nc::NearEdge e = load_near_edge(o.files.at(0), cap_or(o, 8));
  if (o.action == "poly") {
    print_poly(o, nc::complete_near_edge_poly(e));
  } else if (o.action == "max-poly") {
    print_poly(o, nc::max_near_edge_poly(e));
  } else if (o.action == "factor") {
    const auto factors = nc::factorize(e);
    if (o.json) {
      json out = json::array();
      for (const auto& f : factors) {
        json pts = json::array();
        for (const auto& p : f.points()) pts.push_back({p.x.get_str(), p.y.get_str()});
        out.push_back(pts);
      }
      std::cout << json{{"factors", out}}.dump() << "\n";
    } else {
      std::cout << factors.size() << (factors.size() == 1 ? " prime factor" : " prime factors")
                << "\n";
      for (const auto& f : factors) {
        for (std::size_t i = 0; i < f.points().size(); ++i)
          std::cout << (i ? " " : "") << nc::to_string(f[i]);
        std::cout << "\n";
      }
    }
  } else {
    const auto lower = nc::lower_extremals(e);
    const auto subs = nc::sub_near_edge_indices(e).size();
    const bool generic = nc::is_generic(e);
    if (o.json)
      std::cout << json{{"weight", e.weight()}, {"lower_extremals", lower},
                        {"sub_near_edges", subs}, {"generic", generic}}
                       .dump()
                << "\n";
    else
      std::cout << "weight = " << e.weight() << ", V^- = " << index_list(lower)
                << ", sub-near-edges = " << subs << ", generic = " << (generic ? "yes" : "no")
                << "\n";
  }
  return kOk;
}

int cmd_nearly(const Options& o) {
  if (o.files.size() < 3)
    throw nc::ParseError("a nearly convex polygon needs at least 3 near-edge files");
  std::vector<nc::NearEdge> edges;
  for (const auto& f : o.files) edges.push_back(load_near_edge(f, cap_or(o, 8)));
  const nc::NearlyConvexPolygon p(std::move(edges));
  if (o.action == "tau-max") {
    print_value(o, nc::tau_max(p));
  } else if (o.action == "poly") {
    print_poly(o, nc::triangulation_poly(p));
  } else {
    const nc::StabilizedPoly r = nc::stabilized_oracle_poly(p);
    if (o.json)
      std::cout << json{{"poly", nc::to_json(r.poly)}, {"eps", r.eps.get_str()}}.dump() << "\n";
    else
      std::cout << r.poly.to_string() << "\neps = " << r.eps << "\n";
  }
  return kOk;
}

int cmd_oracle(const Options& o) {
  std::vector<nc::Point> pts = nc::read_points_file(o.files.at(0));
  enforce_cap(pts.size(), cap_or(o, 12), "point count");
  const nc::PointConfiguration c = [&] {
    try {
      return nc::PointConfiguration(std::move(pts));
    } catch (const std::invalid_argument& err) {
      throw nc::ParseError(o.files[0] + ": " + err.what());
    }
  }();
  const nc::SPoly p = nc::triangulation_poly_bruteforce(c);
  nc::BigInt total = 0;
  for (const auto& [exp, coeff] : p.coeffs()) total += coeff;
  if (o.json)
    std::cout << json{{"poly", nc::to_json(p)}, {"total", nc::to_string(total)}}.dump() << "\n";
  else
    std::cout << p.to_string() << "\ntotal = " << total << "\n";
  return kOk;
}

int cmd_check(const Options& o) {
  if (o.action == "a086452") {
    enforce_cap(o.bound, cap_or(o, 40), "prefix length");
    if (o.bound == 0) throw nc::ParseError("prefix length must be positive");
    const auto values = nc::a086452_prefix(o.bound);
    if (o.json) {
      json out = json::array();
      for (const auto& v : values) out.push_back(nc::to_string(v));
      std::cout << json{{"a086452", out}}.dump() << "\n";
    } else {
      for (std::size_t i = 0; i < values.size(); ++i) std::cout << (i ? " " : "") << values[i];
      std::cout << "\n";
    }
    return kOk;
  }

  bool all_pass = true;
  json report = json::array();
  if (o.action == "identities") {
    enforce_cap(o.bound, cap_or(o, 12), "identity bound");
    if (o.bound == 0) throw nc::ParseError("identity bound must be positive");
    for (const auto& c : nc::run_identity_checks(static_cast<unsigned>(o.bound))) {
      all_pass = all_pass && c.pass;
      if (o.json)
        report.push_back({{"identity", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      else
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name
                  << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    }
  } else {
    enforce_cap(o.bound, cap_or(o, 31), "prime bound");
    for (unsigned long p = 3; p <= o.bound; p += 2) {
      if (!nc::is_odd_prime(p)) continue;
      const auto c = nc::legendre_check(p);
      all_pass = all_pass && c.pass;
      if (o.json) {
        json residues = json::array();
        for (const auto& r : c.residues) residues.push_back(nc::to_string(r));
        report.push_back({{"p", p}, {"expected", nc::to_string(c.expected)},
                          {"residues", residues}, {"pass", c.pass}});
      } else {
        std::cout << "p = " << p << ": expected " << c.expected << ", got " << c.residues[0]
                  << " " << c.residues[1] << " " << c.residues[2] << " "
                  << (c.pass ? "PASS" : "COUNTEREXAMPLE") << "\n";
      }
    }
  }
  if (o.json) std::cout << json{{"check", o.action}, {"results", report}}.dump() << "\n";
  return all_pass ? kOk : kCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact triangulation counts for weakly and nearly convex polygons"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Emit JSON instead of text");
  app.add_option("--cap", o.cap, "Override the enumeration cap of the chosen command");

  auto* weights = app.add_subcommand("weights", "Weakly convex polygon from edge weights");
  weights->add_option("action", o.action)->required()->check(
      CLI::IsMember({"tau-max", "poly", "incl-excl"}));
  weights->add_option("weights", o.weights, "Comma separated, e.g. 1,5,2,3,4")->required();

  auto* near_edge = app.add_subcommand("near-edge", "Polynomials and structure of a near-edge");
  near_edge->add_option("action", o.action)->required()->check(
      CLI::IsMember({"poly", "max-poly", "factor", "info"}));
  near_edge->add_option("file", o.files)->required()->expected(1);

  auto* nearly = app.add_subcommand("nearly", "Nearly convex polygon glued from near-edges");
  nearly->add_option("action", o.action)->required()->check(
      CLI::IsMember({"tau-max", "poly", "oracle"}));
  nearly->add_option("files", o.files)->required();

  auto* oracle = app.add_subcommand("oracle", "Brute-force triangulation polynomial");
  oracle->add_option("file", o.files)->required()->expected(1);

  auto* check = app.add_subcommand("check", "Conjecture and identity sweeps");
  check->add_option("target", o.action)->required()->check(
      CLI::IsMember({"legendre", "a086452", "identities"}));
  check->add_option("bound", o.bound)->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*weights) return cmd_weights(o);
    if (*near_edge) return cmd_near_edge(o);
    if (*nearly) return cmd_nearly(o);
    if (*oracle) return cmd_oracle(o);
    return cmd_check(o);
  } catch (const nc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const OverCap& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOverCap;
  } catch (const nc::InconclusiveError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInconclusive;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
