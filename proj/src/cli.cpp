// Copyright 2026 The ordrange Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ordrange/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordrange/completability.hpp"
#include "ordrange/enumeration.hpp"
#include "ordrange/errors.hpp"
#include "ordrange/generators.hpp"
#include "ordrange/green.hpp"
#include "ordrange/guards.hpp"
#include "ordrange/isomorphism.hpp"
#include "ordrange/regularity.hpp"
#include "ordrange/verify.hpp"

namespace ordrange::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Report {
  Json json;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

// Parses "a,b,c" into integers; rejects empty items and non-numbers.
std::vector<Point> parse_list(std::string const& text, char const* flag) {
  std::vector<Point> values;
  if (text.empty()) {
    throw UsageError(std::string(flag) + ": empty list");
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t const comma = std::min(text.find(',', start), text.size());
    std::string const item = text.substr(start, comma - start);
    Point value = 0;
    auto const [ptr, ec] =
        std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw UsageError(std::string(flag) + ": '" + item +
                       "' is not an integer");
    }
    values.push_back(value);
    start = comma + 1;
  }
  return values;
}

RangeSet parse_range(std::string const& text, std::size_t n, char const* flag) {
  std::vector<Point> const pts = parse_list(text, flag);
  for (Point p : pts) {
    if (p < 1 || static_cast<std::size_t>(p) > n) {
      throw UsageError(std::string(flag) + ": point " + std::to_string(p) +
                       " outside {1.." + std::to_string(n) + "}");
    }
  }
  std::set<Point> const distinct(pts.begin(), pts.end());
  if (distinct.size() != pts.size()) {
    throw UsageError(std::string(flag) + ": points must be distinct");
  }
  if (!std::is_sorted(pts.begin(), pts.end())) {
    throw UsageError(std::string(flag) + ": points must be strictly increasing");
  }
  return RangeSet(n, pts);
}

Json big(BigInt const& value) {
  if (auto small = to_u64(value)) {
    return *small;
  }
  return to_string(value);
}

Json points(std::span<Point const> pts) {
  return Json(std::vector<Point>(pts.begin(), pts.end()));
}

Json map_json(ChainMap const& f) { return points(f.images()); }

std::string cell(Json const& value) {
  if (value.is_string()) {
    return value.get<std::string>();
  }
  return value.dump();
}

std::string csv_field(std::string const& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) {
    return field;
  }
  std::string quoted = "\"";
  for (char c : field) {
    quoted += c;
    if (c == '"') {
      quoted += '"';
    }
  }
  return quoted + "\"";
}

void tabulate_scalars(Report& report) {
  if (!report.columns.empty()) {
    return;
  }
  std::vector<std::string> row;
  for (auto const& [key, value] : report.json.items()) {
    report.columns.push_back(key);
    row.push_back(cell(value));
  }
  report.rows.push_back(std::move(row));
}

void render(Report report, std::string const& format, std::ostream& out) {
  if (format == "json") {
    out << report.json.dump() << '\n';
    return;
  }
  tabulate_scalars(report);
  if (format == "csv") {
    auto line = [&out](std::vector<std::string> const& fields) {
      for (std::size_t i = 0; i < fields.size(); ++i) {
        out << (i ? "," : "") << csv_field(fields[i]);
      }
      out << '\n';
    };
    line(report.columns);
    for (auto const& row : report.rows) {
      line(row);
    }
    return;
  }
  std::vector<std::size_t> width(report.columns.size());
  for (std::size_t c = 0; c < width.size(); ++c) {
    width[c] = report.columns[c].size();
    for (auto const& row : report.rows) {
      width[c] = std::max(width[c], row.at(c).size());
    }
  }
  auto line = [&](std::vector<std::string> const& fields) {
    for (std::size_t c = 0; c < fields.size(); ++c) {
      out << (c ? "  " : "") << std::left
          << std::setw(static_cast<int>(c + 1 == fields.size() ? 0 : width[c]))
          << fields[c];
    }
    out << '\n';
  };
  line(report.columns);
  for (auto const& row : report.rows) {
    line(row);
  }
}

struct Options {
  std::size_t n = 0;
  std::string y;
  std::string format = "json";
  bool seedless = false;

  std::size_t image_size = 0;
  std::string map;
  std::string relation = "D";
  std::string method_green = "characterized";
  std::string domain;
  std::string images;
  std::string method_rank = "formula";
  bool check = false;
  std::size_t n2 = 0;
  std::string z;
  bool all = false;
};

RangeSet require_y(Options const& o) {
  if (o.n == 0) {
    throw UsageError("-n: chain size must be positive");
  }
  if (o.y.empty()) {
    throw UsageError("-Y: range set is required");
  }
  return parse_range(o.y, o.n, "-Y");
}

Report cmd_card(Options const& o) {
  RangeSet const y = require_y(o);
  Report r;
  r.json["count"] = big(count_on_y(y.degree(), y.size()));
  return r;
}

Report cmd_enumerate(Options const& o) {
  RangeSet const y = require_y(o);
  std::vector<ChainMap> const elements =
      o.image_size ? enumerate_by_image_size(y, o.image_size) : list_on_y(y);
  Report r;
  r.json["n"] = y.degree();
  r.json["Y"] = points(y.members());
  r.json["count"] = elements.size();
  Json list = Json::array();
  r.columns = {"index", "map", "rank"};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    list.push_back(map_json(elements[i]));
    r.rows.push_back({std::to_string(i), to_string(elements[i]),
                      std::to_string(rank(elements[i]))});
  }
  r.json["elements"] = std::move(list);
  return r;
}

Report cmd_regular(Options const& o) {
  RangeSet const y = require_y(o);
  Report r;
  if (!o.map.empty()) {
    ChainMap const alpha(parse_list(o.map, "--map"));
    r.json["map"] = map_json(alpha);
    r.json["regular"] = is_regular(alpha, y);
    return r;
  }
  std::vector<ChainMap> const all = list_on_y(y);
  std::vector<ChainMap> const reg = regular_part(y);
  r.json["n"] = y.degree();
  r.json["Y"] = points(y.members());
  r.json["size"] = all.size();
  r.json["regular_count"] = reg.size();
  r.json["semigroup_regular"] = is_semigroup_regular(y);
  Json list = Json::array();
  r.columns = {"map", "rank"};
  for (auto const& f : reg) {
    list.push_back(map_json(f));
    r.rows.push_back({to_string(f), std::to_string(rank(f))});
  }
  r.json["regular"] = std::move(list);
  return r;
}

Report cmd_green(Options const& o) {
  RangeSet const y = require_y(o);
  auto const rel = parse_green_relation(o.relation);
  if (!rel) {
    throw UsageError("--relation: expected one of L, R, H, D, J");
  }
  SemigroupTable const s = enumerate_on_y(y);
  EggBox const box = o.method_green == "oracle" ? green_oracle(*rel, s)
                                                : green_characterized(*rel, s, y);
  Report r;
  r.json["relation"] = std::string(to_string(box.relation));
  Json classes = Json::array();
  Json meta = Json::array();
  r.columns = {"class", "map", "rank", "regular"};
  for (std::size_t c = 0; c < box.classes.size(); ++c) {
    Json members = Json::array();
    for (ElementId id : box.classes[c]) {
      members.push_back(map_json(s.element(id)));
      r.rows.push_back({std::to_string(c), to_string(s.element(id)),
                        std::to_string(box.meta[c].rank),
                        box.meta[c].regular ? "true" : "false"});
    }
    classes.push_back(std::move(members));
    Json m;
    m["rank"] = box.meta[c].rank;
    m["regular"] = box.meta[c].regular;
    m["image"] = box.meta[c].image ? points(*box.meta[c].image) : Json();
    m["kernel"] = box.meta[c].kernel ? points(box.meta[c].kernel->boundaries())
                                     : Json();
    meta.push_back(std::move(m));
  }
  r.json["classes"] = std::move(classes);
  r.json["meta"] = std::move(meta);
  return r;
}

Report cmd_complete(Options const& o) {
  RangeSet const y = require_y(o);
  if (o.domain.empty() || o.images.empty()) {
    throw UsageError("--domain and --images are required");
  }
  PartialMap const theta(y.degree(), parse_list(o.domain, "--domain"),
                         parse_list(o.images, "--images"));
  Report r;
  r.json["theta"] = Json::parse(to_string(theta));
  r.json["completable"] = is_completable(theta, y);
  auto const ext = construct_extension(theta, y);
  r.json["extension"] = ext ? map_json(*ext) : Json();
  r.json["extensions"] = complete_extensions(theta, y).size();
  bool const between_subchains =
      theta.is_injective() &&
      std::all_of(theta.domain().begin(), theta.domain().end(),
                  [&y](Point a) { return y.contains(a); });
  r.json["bicompletable"] =
      between_subchains ? Json(is_bicompletable(theta, y)) : Json();
  return r;
}

Report cmd_rank(Options const& o) {
  RangeSet const y = require_y(o);
  std::size_t const n = y.degree();
  std::size_t const r_size = y.size();
  bool const proper = r_size > 1 && r_size < n;
  Report r;
  BigInt const formula = rank_formula(y);
  if (o.method_rank == "formula") {
    r.json["rank"] = big(formula);
  } else if (o.method_rank == "constructed") {
    if (!proper) {
      throw UsageError("--method constructed needs 1 < |Y| < n");
    }
    auto const gs = build_generating_set(y);
    r.json["rank"] = gs.members.size();
    r.json["case"] = gs.case_label;
  } else if (o.method_rank == "brute") {
    auto const rs = rank_bruteforce(y);
    r.json["rank"] = rs.rank;
    r.json["semigroup_rank"] = rs.semigroup_rank;
    r.json["monoid"] = rs.monoid;
    r.json["minimum_sets"] = rs.minimum_sets.size();
    r.json["subsets_tested"] = rs.subsets_tested;
  } else {
    throw UsageError("--method: expected formula, constructed or brute");
  }
  if (o.check) {
    Json check;
    check["formula"] = big(formula);
    bool agree = true;
    if (proper) {
      auto const gs = build_generating_set(y);
      check["constructed"] = gs.members.size();
      agree = agree && BigInt(gs.members.size()) == formula &&
              generates(gs.members, enumerate_on_y(y));
    } else {
      check["constructed"] = nullptr;
    }
    if (count_on_y(n, r_size) <= subset_search_limit()) {
      auto const rs = rank_bruteforce(y);
      check["brute"] = rs.rank;
      agree = agree && BigInt(rs.rank) == formula;
    } else {
      check["brute"] = nullptr;
    }
    check["agree"] = agree;
    r.json["check"] = check;
    if (!agree) {
      throw VerificationFailure(r.json.dump());
    }
  }
  return r;
}

Report cmd_gens(Options const& o) {
  RangeSet const y = require_y(o);
  auto const gs = build_generating_set(y);
  Report r;
  r.json["n"] = y.degree();
  r.json["Y"] = points(y.members());
  r.json["case"] = gs.case_label;
  r.json["rank"] = gs.members.size();
  Json list = Json::array();
  r.columns = {"tag", "map", "kernel"};
  for (std::size_t i = 0; i < gs.members.size(); ++i) {
    auto const& p = gs.provenance[i];
    Json g;
    g["map"] = map_json(gs.members[i]);
    g["tag"] = p.tag();
    if (p.kernel) {
      g["kernel"] = points(p.kernel->boundaries());
    }
    list.push_back(std::move(g));
    r.rows.push_back({p.tag(), to_string(gs.members[i]),
                      p.kernel ? to_string(*p.kernel) : ""});
  }
  r.json["generators"] = std::move(list);
  return r;
}

Report cmd_iso(Options const& o) {
  RangeSet const y = require_y(o);
  std::size_t const n2 = o.n2 ? o.n2 : o.n;
  if (o.z.empty()) {
    throw UsageError("-Z: second range set is required");
  }
  RangeSet const z = parse_range(o.z, n2, "-Z");
  IsomorphismVerdict const verdict = classify_isomorphism(y, z);
  Report r;
  r.json["isomorphic"] = verdict.isomorphic;
  r.json["condition"] = verdict.condition ? Json(*verdict.condition) : Json();
  std::size_t const limit = subset_search_limit();
  bool const searchable = count_on_y(y.degree(), y.size()) <= limit &&
                          count_on_y(z.degree(), z.size()) <= limit;
  if (!searchable && o.check) {
    throw GuardError("iso --check: semigroups exceed the search guard");
  }
  Json mapping;
  Json theta;
  if (searchable) {
    SemigroupTable const s = enumerate_on_y(y);
    SemigroupTable const t = enumerate_on_y(z);
    auto const phi = find_isomorphism(s, t);
    if (phi) {
      mapping = Json::array();
      for (std::size_t a = 0; a < phi->size(); ++a) {
        Json pair;
        pair["from"] = map_json(s.element(static_cast<ElementId>(a)));
        pair["to"] = map_json(t.element((*phi)[a]));
        mapping.push_back(std::move(pair));
      }
      theta = Json::array();
      for (auto const& [x, xt] : induced_range_bijection(*phi, s, t)) {
        theta.push_back({x, xt});
      }
    }
    if (o.check && phi.has_value() != verdict.isomorphic) {
      throw VerificationFailure("iso: search disagrees with classification");
    }
  }
  r.json["mapping"] = std::move(mapping);
  r.json["induced_theta"] = std::move(theta);
  return r;
}

Report cmd_verify(Options const& o) {
  if (o.n == 0) {
    throw UsageError("-n: chain size must be positive");
  }
  if (o.all == !o.y.empty()) {
    throw UsageError("verify: give exactly one of --all and -Y");
  }
  std::vector<RangeSet> const ranges =
      o.all ? all_range_sets(o.n)
            : std::vector<RangeSet>{parse_range(o.y, o.n, "-Y")};
  VerifyReport const report = verify_ranges(ranges);
  Report r;
  r.json["n"] = o.n;
  r.json["ranges"] = ranges.size();
  Json checks = Json::array();
  r.columns = {"check", "cases", "failures", "skipped", "first_failure"};
  for (auto const& c : report.checks) {
    Json j;
    j["name"] = c.name;
    j["cases"] = c.cases;
    j["failures"] = c.failures;
    j["skipped"] = c.skipped;
    j["first_failure"] = c.first_failure;
    checks.push_back(std::move(j));
    r.rows.push_back({c.name, std::to_string(c.cases),
                      std::to_string(c.failures), std::to_string(c.skipped),
                      c.first_failure});
  }
  r.json["checks"] = std::move(checks);
  r.json["ok"] = report.ok();
  return r;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Order-preserving transformations with restricted range",
               "ordrange"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;
  app.add_option("-n", o.n, "chain size");
  app.add_option("-Y", o.y, "range set, comma separated, strictly increasing");
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_flag("--seedless", o.seedless,
               "accepted for compatibility; output never depends on a seed");

  auto* card = app.add_subcommand("card", "|O_n(Y)|");
  auto* enumerate = app.add_subcommand("enumerate", "list O_n(Y)");
  enumerate->add_option("--image-size", o.image_size,
                        "only maps with this many image points");
  auto* regular = app.add_subcommand("regular", "regular elements");
  regular->add_option("--map", o.map, "test one map, images comma separated");
  auto* green = app.add_subcommand("green", "Green's classes");
  green->add_option("--relation", o.relation, "L, R, H, D or J");
  green->add_option("--method", o.method_green, "characterized or oracle")
      ->check(CLI::IsMember({"characterized", "oracle"}));
  auto* complete = app.add_subcommand("complete", "extend a partial map");
  complete->add_option("--domain", o.domain, "domain points");
  complete->add_option("--images", o.images, "images of the domain points");
  auto* rank_cmd = app.add_subcommand("rank", "rank of O_n(Y)");
  rank_cmd->add_option("--method", o.method_rank,
                       "formula, constructed or brute");
  rank_cmd->add_flag("--check", o.check, "cross-check all methods");
  auto* gens = app.add_subcommand("gens", "minimum generating set");
  auto* iso = app.add_subcommand("iso", "isomorphism of O_n(Y) and O_m(Z)");
  iso->add_option("--n2", o.n2, "chain size for Z (default n)");
  iso->add_option("-Z", o.z, "second range set");
  iso->add_flag("--check", o.check, "search must agree with the criterion");
  auto* verify = app.add_subcommand("verify", "oracle cross-checks");
  verify->add_flag("--all", o.all, "every nonempty Y on the chain");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::ParseError const& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    Report report;
    if (card->parsed()) {
      report = cmd_card(o);
    } else if (enumerate->parsed()) {
      report = cmd_enumerate(o);
    } else if (regular->parsed()) {
      report = cmd_regular(o);
    } else if (green->parsed()) {
      report = cmd_green(o);
    } else if (complete->parsed()) {
      report = cmd_complete(o);
    } else if (rank_cmd->parsed()) {
      report = cmd_rank(o);
    } else if (gens->parsed()) {
      report = cmd_gens(o);
    } else if (iso->parsed()) {
      report = cmd_iso(o);
    } else {
      report = cmd_verify(o);
      bool const ok = report.json["ok"].get<bool>();
      render(std::move(report), o.format, out);
      return ok ? kExitOk : kExitFailure;
    }
    render(std::move(report), o.format, out);
    return kExitOk;
  } catch (VerificationFailure const& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitFailure;
  } catch (InternalError const& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  } catch (UsageError const& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace ordrange::cli
