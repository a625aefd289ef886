#include "cka/cli.hpp"

#include "cka/closure.hpp"
#include "cka/linear_system.hpp"
#include "cka/semantics.hpp"
#include "cka/splitting.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <map>
#include <ostream>

namespace cka::cli {

namespace {

using nlohmann::json;

enum class Format { Text, Structured, Dot };

struct Settings {
  Format format = Format::Text;
  std::size_t cap = kDefaultLanguageCap;
};

json pomset_json(const Pomset& u) {
  switch (u.kind()) {
    case PomsetKind::Unit:
      return {{"kind", "unit"}};
    case PomsetKind::Prim:
      return {{"kind", "prim"}, {"label", u.label()}};
    default: {
      json children = json::array();
      for (const Pomset& c : u.children()) children.push_back(pomset_json(c));
      return {{"kind", u.kind() == PomsetKind::Seq ? "seq" : "par"}, {"children", children}};
    }
  }
}

// Hasse diagram: keep only the covering pairs of the order.
void write_dot(std::ostream& out, const Pomset& u, const std::string& name) {
  const LabelledPoset p = to_labelled_poset(u);
  out << "digraph " << name << " {\n  label=\"" << u.text() << "\";\n";
  for (std::size_t i = 0; i < p.size(); ++i) out << "  e" << i << " [label=\"" << p.label(i) << "\"];\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (!p.less(i, j)) continue;
      bool covering = true;
      for (std::size_t k = 0; k < p.size() && covering; ++k) covering = !(p.less(i, k) && p.less(k, j));
      if (covering) out << "  e" << i << " -> e" << j << ";\n";
    }
  }
  out << "}\n";
}

struct Outcome {
  bool ok = true;
  std::optional<Pomset> witness;
  std::string detail;
};

// Two-sided bounded closure check: every pomset below bka(e, k) lies in
// bka(c, K), and every pomset of bka(c, k) lies below bka(e, K), K = k·|e|.
Outcome verify_closure(Term e, Term c, std::size_t k, std::size_t cap) {
  const std::size_t big = k * e.size();
  MembershipOracle in_closure(big);
  for (const Pomset& u : cka_language(e, k, cap)) {
    if (!in_closure.bka_contains(u, c)) return {false, u, "below the input but missing from the closure"};
  }
  MembershipOracle below_input(big);
  for (const Pomset& u : bka_language(c, k, cap)) {
    if (!below_input.cka_contains(u, e)) return {false, u, "in the closure but not below the input"};
  }
  return {};
}

void print_system(std::ostream& out, const LinearSystem& system, Format format) {
  if (format == Format::Structured) {
    json rows = json::array();
    for (std::size_t i = 0; i < system.size(); ++i) {
      json entries = json::array();
      for (std::size_t j = 0; j < system.size(); ++j) entries.push_back(to_string(system.matrix(i, j)));
      rows.push_back({{"index", system.index()[i]}, {"matrix", entries}, {"vector", to_string(system.vector(i))}});
    }
    out << json{{"system", rows}}.dump(2) << '\n';
  } else {
    out << dump_system(system);
  }
}

int cmd_close(const std::string& text, std::optional<std::size_t> verify, bool show_system, const Settings& s,
              std::ostream& out) {
  const Term e = simplify(parse(text));
  ClosureEngine engine;
  if (show_system && e.kind() == TermKind::Par) {
    auto ops = e.operands();
    const auto cs = engine.build_system(ops.front(), Term::par(std::vector<Term>(ops.begin() + 1, ops.end())));
    print_system(out, cs.system, s.format);
  }
  const Term c = engine.close(e);
  std::optional<Outcome> checked;
  if (verify) checked = verify_closure(e, c, *verify, s.cap);

  if (s.format == Format::Structured) {
    json j{{"input", to_string(e)}, {"closure", to_string(c)}, {"width", c.width()}};
    if (checked) {
      j["verify"] = {{"bound", *verify}, {"ok", checked->ok}};
      if (checked->witness) {
        j["verify"]["counterexample"] = pomset_json(*checked->witness);
        j["verify"]["reason"] = checked->detail;
      }
    }
    out << j.dump(2) << '\n';
  } else {
    out << to_string(c) << '\n';
    if (checked) {
      if (checked->ok) {
        out << "verified at bound " << *verify << '\n';
      } else {
        out << "verification failed at bound " << *verify << ": " << checked->witness->text() << " is "
            << checked->detail << '\n';
      }
    }
  }
  return checked && !checked->ok ? kNotEqual : kOk;
}

int cmd_equiv(const std::string& left, const std::string& right, std::size_t bound, const Settings& s,
              std::ostream& out) {
  const Term e1 = parse(left);
  const Term e2 = parse(right);
  // Bounded members of each side are tested against the exact closed
  // language of the other side, so a reported counterexample is genuine.
  MembershipOracle exact;
  std::optional<Pomset> witness;
  bool in_left = true;
  for (const Pomset& u : cka_language(e1, bound, s.cap)) {
    if (!exact.cka_contains(u, e2)) {
      witness = u;
      break;
    }
  }
  if (!witness) {
    for (const Pomset& u : cka_language(e2, bound, s.cap)) {
      if (!exact.cka_contains(u, e1)) {
        witness = u;
        in_left = false;
        break;
      }
    }
  }
  const bool exact_result = !e1.has_star() && !e2.has_star();
  if (s.format == Format::Structured) {
    json j{{"result", witness ? "not-equal" : exact_result ? "equal" : "equal-up-to-bound"}, {"bound", bound}};
    if (witness) {
      j["counterexample"] = pomset_json(*witness);
      j["counterexample_text"] = witness->text();
      j["contained_in"] = in_left ? "left" : "right";
    }
    out << j.dump(2) << '\n';
  } else if (witness) {
    out << "not-equal\ncounterexample: " << witness->text() << "\ncontained in: " << (in_left ? "left" : "right")
        << '\n';
  } else if (exact_result) {
    out << "equal\n";
  } else {
    out << "equal-up-to-bound " << bound << '\n';
  }
  return witness ? kNotEqual : kEqual;
}

int cmd_lang(const std::string& text, std::size_t bound, const std::string& semantics, const Settings& s,
             std::ostream& out) {
  const Term e = parse(text);
  const PomsetLanguage lang = semantics == "cka" ? cka_language(e, bound, s.cap) : bka_language(e, bound, s.cap);
  switch (s.format) {
    case Format::Text:
      for (const Pomset& u : lang) out << u.text() << '\n';
      break;
    case Format::Structured: {
      json list = json::array();
      for (const Pomset& u : lang) list.push_back(pomset_json(u));
      out << list.dump(2) << '\n';
      break;
    }
    case Format::Dot: {
      std::size_t n = 0;
      for (const Pomset& u : lang) write_dot(out, u, "p" + std::to_string(n++));
      break;
    }
  }
  return kOk;
}

int cmd_splits(const std::string& text, const std::string& kind, const Settings& s, std::ostream& out) {
  const Term e = parse(text);
  const auto pairs = kind == "seq" ? seq_splices(e) : par_splices(e);
  if (s.format == Format::Structured) {
    json list = json::array();
    for (const auto& p : pairs) list.push_back({{"left", to_string(p.left)}, {"right", to_string(p.right)}});
    out << list.dump(2) << '\n';
  } else {
    for (const auto& p : pairs) out << to_string(p.left) << " , " << to_string(p.right) << '\n';
  }
  return kOk;
}

int cmd_remainders(const std::string& text, const Settings& s, std::ostream& out) {
  const auto rs = remainders(parse(text));
  if (s.format == Format::Structured) {
    json list = json::array();
    for (Term t : rs) list.push_back(to_string(t));
    out << list.dump(2) << '\n';
  } else {
    for (Term t : rs) out << to_string(t) << '\n';
  }
  return kOk;
}

int cmd_solve(const std::string& path, bool show_system, const Settings& s, std::ostream& out) {
  const LinearSystem system = load_system_file(path);
  if (show_system) print_system(out, system, s.format);
  const Assignment x = solve_least(system);
  if (s.format == Format::Structured) {
    json j = json::object();
    for (const auto& name : system.index()) j[name] = to_string(x.at(name));
    out << j.dump(2) << '\n';
  } else {
    for (const auto& name : system.index()) out << name << " = " << to_string(x.at(name)) << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Concurrent Kleene algebra closure and equivalence tool", "cka"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings settings;
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured", "dot"}));
  app.add_option("--cap", settings.cap, "Language cardinality cap")->check(CLI::PositiveNumber);

  std::size_t bound = 2;
  std::string expr, expr2, semantics = "bka", kind = "par", path;
  std::optional<std::size_t> verify;
  bool show_system = false;

  auto* close = app.add_subcommand("close", "Print the closure of an expression");
  close->add_option("expr", expr, "Expression")->required();
  close->add_option("--verify", verify, "Check the closure properties at this bound");
  close->add_flag("--show-system", show_system, "Print the linear system of a parallel composition");

  auto* equiv = app.add_subcommand("equiv", "Compare the closed languages of two expressions");
  equiv->add_option("left", expr, "First expression")->required();
  equiv->add_option("right", expr2, "Second expression")->required();
  equiv->add_option("--bound", bound, "Star unrolling bound");

  auto* lang = app.add_subcommand("lang", "List the bounded language of an expression");
  lang->add_option("expr", expr, "Expression")->required();
  lang->add_option("--bound", bound, "Star unrolling bound");
  lang->add_option("--semantics", semantics, "bka or cka")->check(CLI::IsMember({"bka", "cka"}));

  auto* splits = app.add_subcommand("splits", "List parallel or sequential splices");
  splits->add_option("expr", expr, "Expression")->required();
  splits->add_option("--kind", kind, "par or seq")->check(CLI::IsMember({"par", "seq"}));

  auto* rems = app.add_subcommand("remainders", "List right-hand remainders");
  rems->add_option("expr", expr, "Expression")->required();

  auto* solve = app.add_subcommand("solve", "Solve a linear system file");
  solve->add_option("file", path, "System file")->required();
  solve->add_flag("--show-system", show_system, "Print the parsed system first");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  settings.format = format == "structured" ? Format::Structured : format == "dot" ? Format::Dot : Format::Text;

  try {
    if (settings.format == Format::Dot && !lang->parsed()) {
      err << "error: --format dot is only available for lang\n";
      return kUsage;
    }
    if (close->parsed()) return cmd_close(expr, verify, show_system, settings, out);
    if (equiv->parsed()) return cmd_equiv(expr, expr2, bound, settings, out);
    if (lang->parsed()) return cmd_lang(expr, bound, semantics, settings, out);
    if (splits->parsed()) return cmd_splits(expr, kind, settings, out);
    if (rems->parsed()) return cmd_remainders(expr, settings, out);
    if (solve->parsed()) return cmd_solve(path, show_system, settings, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SystemFormatError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace cka::cli
