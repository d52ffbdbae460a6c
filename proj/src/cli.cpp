#include "strandbox/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

#include "strandbox/errors.hpp"
#include "strandbox/verify.hpp"

namespace strandbox {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int n = 3;
  std::string orient;
  std::string format = "table";
};

Presentation presentation(const Config& c) {
  if (c.n < 3) throw UsageError("--n must be at least 3");
  const std::string spec = c.orient.empty() ? std::string(static_cast<size_t>(c.n - 1), 'R') : c.orient;
  if (static_cast<int>(spec.size()) != c.n - 1) {
    throw UsageError("--orient needs n-1 = " + std::to_string(c.n - 1) + " characters");
  }
  try {
    return build_type_C_algebra(c.n, Orientation::parse(spec));
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

ModuleRef module_arg(const Presentation& p, const std::string& text) {
  try {
    return parse_module(p, text);
  } catch (const DomainError& e) {
    throw UsageError(std::string("bad module '") + text + "': " + e.what());
  }
}

std::string vec_text(const std::vector<long long>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

AdmissibleSeq sequence_arg(const Orientation& o, const std::string& text) {
  AdmissibleSeq seq;
  std::stringstream in(text);
  std::string part;
  try {
    while (std::getline(in, part, ',')) seq.order.push_back(std::stoi(part));
  } catch (const std::exception&) {
    throw UsageError("bad sequence '" + text + "'");
  }
  for (auto pol : {Polarity::Plus, Polarity::Minus}) {
    seq.polarity = pol;
    if (is_admissible(o, seq)) return seq;
  }
  throw UsageError("sequence '" + text + "' is not admissible for " + o.to_string());
}

void print_modules(const Presentation& p, const Config& c, const std::vector<ModuleRef>& ms,
                   std::ostream& out) {
  if (c.format == "json") {
    Json j = Json::array();
    for (const auto& m : ms) j.push_back(module_to_json(p, m));
    out << j.dump(2) << "\n";
    return;
  }
  for (const auto& m : ms) out << format_module(p, m) << "\n";
}

void print_graph(const Presentation& p, const Config& c, const ComponentGraph& g, std::ostream& out) {
  if (c.format == "json") {
    out << component_to_json(p, g).dump(2) << "\n";
  } else if (c.format == "dot") {
    out << component_to_dot(p, g);
  } else {
    out << "kind " << to_string(g.kind);
    if (g.period) out << " period " << g.period;
    out << "\n";
    for (const auto& m : g.nodes) {
      const DimVector d = dim_vector(p, m);
      out << format_module(p, m) << " | " << vec_text({d.begin(), d.end()}) << " | "
          << (is_locally_free(p, m) ? vec_text(rank_vector(p, m)) : "-") << "\n";
    }
  }
}

void print_report(const CheckReport& r, const Config& c, std::ostream& out) {
  if (c.format == "json") {
    out << check_report_to_json(r).dump(2) << "\n";
    return;
  }
  for (const auto& f : r.failures) out << "failure: " << f << "\n";
  out << (r.pass ? "PASS" : "FAIL") << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"String and band module computations for type C~ string algebras", "strandbox"};
  app.fallthrough();
  app.require_subcommand(1);
  Config c;
  app.add_option("--n", c.n, "number of vertices")->capture_default_str();
  app.add_option("--orient", c.orient, "edge directions, R for i->i+1 and L for i+1->i");
  app.add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "dot", "table"}))
      ->capture_default_str();

  int max_len = 4;
  auto* strings = app.add_subcommand("strings", "list strings up to a length");
  strings->add_option("--max-len", max_len)->capture_default_str();

  int max_dl = 1;
  auto* bands = app.add_subcommand("bands", "list bands up to a delta-length");
  bands->add_option("--max-dl", max_dl)->capture_default_str();

  std::string module_text;
  int power = 1;
  auto* tau_cmd = app.add_subcommand("tau", "Auslander-Reiten translate of a module");
  tau_cmd->add_option("module", module_text)->required();
  tau_cmd->add_option("--power", power, "negative values apply the inverse")->capture_default_str();

  std::string seed_text;
  int radius = 3;
  auto* component = app.add_subcommand("component", "window of an AR component");
  component->add_option("seed", seed_text)->required();
  component->add_option("--radius", radius)->capture_default_str();

  int minimal_len = 12;
  auto* minimal = app.add_subcommand("minimal", "minimal string modules by type");
  minimal->add_option("--max-len", minimal_len, "length bound for type (2,2)")->capture_default_str();

  int levels = 1;
  auto* tube = app.add_subcommand("tube", "the tube of rank n-1");
  tube->add_option("--levels", levels)->capture_default_str();

  long long bound = 4;
  bool closed_form = false;
  std::string seq_text;
  auto* roots = app.add_subcommand("roots", "positive roots up to a height");
  roots->add_option("--bound", bound)->capture_default_str();
  roots->add_flag("--closed-form", closed_form, "use the Coxeter-orbit description");
  roots->add_option("--seq", seq_text, "plus-admissible sequence such as 3,2,1");

  long long gls_bound = 12;
  auto* gls = app.add_subcommand("verify-gls", "compare rank vectors with positive roots");
  gls->add_option("--bound", gls_bound)->capture_default_str();

  int depth = 6;
  std::string cox_seq;
  auto* cox = app.add_subcommand("verify-coxeter", "Coxeter compatibility along tau-orbits");
  cox->add_option("--seq", cox_seq)->required();
  cox->add_option("--depth", depth)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*tube && levels < 1) throw UsageError("--levels must be positive");
    const Presentation p = presentation(c);
    (void)Field::from_env();

    if (*strings) {
      std::vector<ModuleRef> ms;
      for (const auto& w : enumerate_strings(p, max_len)) ms.push_back(ModuleRef::string(p, w));
      print_modules(p, c, ms, out);
    } else if (*bands) {
      std::vector<ModuleRef> ms;
      for (const auto& b : enumerate_bands(p, max_dl)) ms.push_back(ModuleRef::band(p, b));
      print_modules(p, c, ms, out);
    } else if (*tau_cmd) {
      print_modules(p, c, {tau_power(p, module_arg(p, module_text), power)}, out);
    } else if (*component) {
      ModuleRef seed = module_arg(p, seed_text);
      if (seed.is_zero()) throw UsageError("the zero module has no component");
      print_graph(p, c, build_component(p, seed, radius), out);
    } else if (*minimal) {
      auto table = minimal_strings(p, minimal_len);
      if (c.format == "json") {
        Json j = Json::array();
        for (const auto& [i, ms] : table) {
          Json row{{"type", {i.left, i.right}}, {"modules", Json::array()}};
          for (const auto& m : ms) row["modules"].push_back(format_module(p, m));
          j.push_back(row);
        }
        out << j.dump(2) << "\n";
      } else {
        for (const auto& [i, ms] : table) {
          out << "(" << i.left << "," << i.right << "):";
          for (const auto& m : ms) out << " " << format_module(p, m);
          out << "\n";
        }
      }
    } else if (*tube) {
      if (c.format == "table") {
        auto rows = tube_levels(p, levels);
        for (size_t l = 0; l < rows.size(); ++l) {
          out << "level " << l + 1 << ":";
          for (const auto& m : rows[l]) out << " " << format_module(p, m);
          out << "\n";
        }
      } else {
        print_graph(p, c, tube_rank(p, levels), out);
      }
    } else if (*roots) {
      const CartanData cd = cartan(p.n());
      std::set<RootVector> found;
      if (closed_form) {
        const Orientation& o = p.type_c_orientation();
        AdmissibleSeq seq = seq_text.empty() ? admissible_sequences(o, Polarity::Plus).front()
                                             : sequence_arg(o, seq_text);
        if (seq.polarity != Polarity::Plus) throw UsageError("--closed-form needs a plus-admissible sequence");
        found = closed_form_positive_roots(cd, o, seq, bound).all();
      } else {
        found = enumerate_positive_roots(cd, bound);
      }
      if (c.format == "json") {
        out << roots_to_json(found).dump() << "\n";
      } else {
        for (const auto& r : found) out << vec_text(r) << "\n";
      }
    } else if (*gls) {
      GLSReport r = check_gls(p, gls_bound);
      if (c.format == "json") {
        out << gls_report_to_json(p, r).dump(2) << "\n";
      } else {
        out << gls_report_table(p, r);
      }
      return r.pass ? 0 : 1;
    } else if (*cox) {
      CheckReport r = check_coxeter_compatibility(p, sequence_arg(p.type_c_orientation(), cox_seq), depth);
      print_report(r, c, out);
      return r.pass ? 0 : 1;
    }
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace strandbox
