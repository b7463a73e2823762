// Command-line front end for the ferrand library.
#include "ferrand/cohomology.hpp"
#include "ferrand/doubling.hpp"
#include "ferrand/errors.hpp"
#include "ferrand/families.hpp"
#include "ferrand/invariants.hpp"
#include "ferrand/json_io.hpp"
#include "ferrand/resolution.hpp"
#include "ferrand/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using nlohmann::json;
using namespace ferrand;

namespace {

enum Exit { kOk = 0, kChecksFailed = 1, kInput = 2, kCap = 3, kInvariant = 4, kInternal = 5 };

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, sep);) {
    auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

std::string read_source(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

// Where the curve comes from: construct flags, a fixture name, a MuMap JSON
// file or an ideal JSON file. Only the last one lacks a doubling map.
struct Source {
  int r = 0, n = 0, a = -1;
  std::string mu, mu_json, ideal_json, fixture, field = "QQ", algorithm = "kernel";
  std::uint64_t seed = 1;

  void attach(CLI::App* cmd, bool allow_ideal) {
    cmd->add_option("--r", r, "degree of the rational normal curve");
    cmd->add_option("--n", n, "ambient dimension");
    cmd->add_option("--a", a, "twist of the target line bundle");
    cmd->add_option("--mu", mu, "entries of mu, comma separated, or 'random'");
    cmd->add_option("--mu-json", mu_json, "MuMap JSON file ('-' for stdin)");
    cmd->add_option("--fixture", fixture,
                    "twisted-cubic, odd-conic:b, even-conic:b, elliptic:r, canonical:r");
    cmd->add_option("--field", field, "QQ or Fp:p");
    cmd->add_option("--seed", seed, "seed for random choices");
    cmd->add_option("--algorithm", algorithm, "kernel or lift")->check(CLI::IsMember({"kernel", "lift"}));
    if (allow_ideal) cmd->add_option("--ideal", ideal_json, "ideal JSON file ('-' for stdin)");
  }

  std::optional<MuMap> mu_map() const {
    if (!fixture.empty()) {
      auto parts = split(fixture, ':');
      const std::string& name = parts[0];
      int k = 0;
      if (parts.size() > 2) throw InputError("unknown fixture " + fixture);
      if (parts.size() == 2) {
        auto [end, ec] = std::from_chars(parts[1].data(), parts[1].data() + parts[1].size(), k);
        if (ec != std::errc() || end != parts[1].data() + parts[1].size())
          throw InputError("fixture parameter must be an integer: " + fixture);
      }
      if (name == "twisted-cubic") return MuMap::parse(3, 3, 1, {"t", "u"});
      if (name == "odd-conic") return odd_conic_mu(k);
      if (name == "even-conic") return even_conic_mu(k);
      if (name == "elliptic") return ag_mu(AgKind::Elliptic, k);
      if (name == "canonical") return ag_mu(AgKind::Canonical, k);
      throw InputError("unknown fixture " + fixture);
    }
    if (!mu_json.empty()) return mu_from_json(read_source(mu_json));
    if (mu.empty()) return std::nullopt;
    if (r <= 0 || n <= 0 || a < 0) throw InputError("--r, --n and --a are required with --mu");
    Field f = Field::from_tag(field);
    if (mu == "random") return random_mu(r, n, a, seed, f);
    return MuMap::parse(r, n, a, split(mu, ','), f);
  }

  DoublingAlgorithm doubling_algorithm() const {
    return algorithm == "lift" ? DoublingAlgorithm::SyzygyLift : DoublingAlgorithm::DegreewiseKernel;
  }

  std::optional<DoubleCurve> curve() const {
    auto m = mu_map();
    if (!m) return std::nullopt;
    return double_ideal(*m, doubling_algorithm());
  }

  Ideal ideal() const {
    if (!ideal_json.empty()) return ideal_from_json(read_source(ideal_json));
    auto c = curve();
    if (!c) throw InputError("give --ideal, --fixture, --mu-json or --mu with --r --n --a");
    return c->ideal();
  }

  DoubleCurve required_curve() const {
    auto c = curve();
    if (!c) throw InputError("this command needs a doubling map: --fixture, --mu-json or --mu with --r --n --a");
    return *c;
  }
};

void emit(const json& doc, const std::string& output) {
  std::string text = doc.dump(2) + "\n";
  if (output.empty() || output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output);
  if (!out) throw InputError("cannot write " + output);
  out << text;
}

json resolution_json(const FreeResolution& res, const Ideal& ideal) {
  json twists = json::array();
  for (int i = 1; i <= res.length(); ++i) twists.push_back(res.module(i).twists());
  auto cert = certify(res, ideal);
  return {{"betti", json::parse(res.betti().to_json())},
          {"twists", twists},
          {"length", res.length()},
          {"compositions_zero", cert.compositions_zero},
          {"hilbert_series_match", cert.hilbert_series_match}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double structures on rational normal curves"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output;
  app.add_option("-o,--output", output, "write JSON to this file instead of stdout");

  Source construct_src, analyze_src, resolve_src, normal_src;
  auto* construct = app.add_subcommand("construct", "build the ideal of a doubling");
  construct_src.attach(construct, false);
  bool with_mu = false;
  construct->add_flag("--with-mu", with_mu, "also print the doubling map");

  auto* analyze_cmd = app.add_subcommand("analyze", "invariants of a doubling");
  analyze_src.attach(analyze_cmd, false);

  auto* resolve = app.add_subcommand("resolve", "minimal free resolution");
  resolve_src.attach(resolve, true);
  std::string resolve_format = "json";
  resolve->add_option("--format", resolve_format, "json, or a Betti table as text")->check(CLI::IsMember({"json", "text"}));

  auto* normal = app.add_subcommand("normal-sheaf", "h^0 of the normal sheaf");
  normal_src.attach(normal, true);

  auto* family = app.add_subcommand("family", "fibers of a one-parameter family");
  std::string family_kind, samples = "0,1,2,-1";
  family->add_option("--kind", family_kind, "g-1, g0, g1, g3 or constant")->required();
  family->add_option("--samples", samples, "parameter values, comma separated");

  auto* verify_cmd = app.add_subcommand("verify-paper", "run the reference checks");
  std::string section = "all", verify_format = "text";
  VerifyOptions vopt;
  verify_cmd->add_option("--section", section, "group of checks to run")->check(CLI::IsMember({"2", "3", "4", "5", "all"}));
  verify_cmd->add_option("--max-r", vopt.max_r, "largest support degree in the sweeps");
  verify_cmd->add_option("--seed", vopt.seed, "seed for random doubling maps");
  verify_cmd->add_option("--format", verify_format, "table as text or rows as json")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*construct) {
      auto x = construct_src.required_curve();
      json doc = json::parse(ideal_to_json(x.ideal()));
      if (with_mu) doc = {{"ideal", doc}, {"mu", json::parse(mu_to_json(x.mu()))}};
      emit(doc, output);
    } else if (*analyze_cmd) {
      emit(json::parse(analyze(analyze_src.required_curve(), analyze_src.seed).to_json()), output);
    } else if (*resolve) {
      Ideal ideal = resolve_src.ideal();
      auto res = free_resolution(ideal);
      if (resolve_format == "text")
        std::cout << res.betti().to_text();
      else
        emit(resolution_json(res, ideal), output);
    } else if (*normal) {
      if (auto x = normal_src.curve()) {
        emit(json::parse(tangent_vs_family(*x).to_json()), output);
      } else {
        auto h = h0_normal_sheaf(normal_src.ideal());
        emit({{"h0_normal", h.h0}, {"t_used", h.t_used}, {"generators", h.generators}, {"relations", h.relations}},
             output);
      }
    } else if (*family) {
      auto f = build_family(family_kind_from_name(family_kind));
      std::vector<Scalar> values;
      for (const auto& s : split(samples, ',')) {
        try {
          values.emplace_back(s);
        } catch (const std::invalid_argument&) {
          throw InputError("bad sample value " + s);
        }
      }
      json doc = {{"family", family_name(f.kind)},
                  {"ideal", json::parse(ideal_to_json(f.ideal))},
                  {"evidence", json::parse(flatness_evidence(f, values).to_json())}};
      emit(doc, output);
    } else if (*verify_cmd) {
      vopt.section = section == "all" ? 0 : std::stoi(section);
      auto rows = verify(vopt);
      if (verify_format == "json")
        emit(json::parse(rows_to_json(rows)), output);
      else
        std::cout << rows_to_text(rows);
      bool ok = std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
      return ok ? kOk : kChecksFailed;
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
