#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "taured/dsl.hpp"
#include "taured/emit.hpp"
#include "taured/error.hpp"
#include "taured/verify.hpp"

using namespace taured;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Parse and I/O problems are usage errors; anything later is a failed run.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Loaded {
  AlgebraFile file;
  AlgebraPtr algebra;
  Backend backend;
};

std::optional<Field> field_override(const std::string& flag) {
  if (!flag.empty()) return parse_field(flag);
  if (const char* env = std::getenv("TAURED_FIELD"); env && *env) return parse_field(env);
  return std::nullopt;
}

Loaded load(const std::string& path, const std::optional<Field>& field) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  Loaded l;
  try {
    l.file = parse_algebra_file(buf.str());
  } catch (const Error& e) {
    throw UsageError(path + ": " + e.what());
  }
  if (field) l.file.field = *field;
  l.algebra = build_algebra_file(l.file);
  l.backend = file_backend(l.file, l.algebra);
  return l;
}

Inventory inventory(const Loaded& l) {
  Inventory inv = build_inventory(l.algebra, l.backend);
  for (const auto& w : inv.warnings()) std::cerr << "warning: " << w << "\n";
  return inv;
}

void write_out(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::vector<bool> tilting_flags(const std::vector<STPair>& pairs) {
  std::vector<bool> out;
  for (const auto& p : pairs) out.push_back(p.is_tau_tilting);
  return out;
}

int fail_with(const Report& r) {
  if (const CheckResult* c = r.first_failure()) {
    std::cerr << "first failing check: " << c->name << (c->witness.empty() ? "" : " (" + c->witness + ")") << "\n";
    return kExitFail;
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Support tau-tilting pairs, Hasse quivers and the socle reduction of bound quiver algebras"};
  app.require_subcommand(1);
  std::string field_flag;
  app.add_option("--field", field_flag, "Field override: rational or fp:<p> (also TAURED_FIELD)");

  std::string file;
  bool tilt_only = false, ascii = false, emit_quotient = false, closed = false;
  std::string format = "table", out_path, vertex, kind;
  int n_max = 0;

  auto* enumerate = app.add_subcommand("enumerate", "List the support tau-tilting pairs");
  enumerate->add_option("file", file, "Algebra file")->required();
  enumerate->add_flag("--tau-tilt-only", tilt_only, "Only the tau-tilting modules");
  enumerate->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "dot", "table"}));
  enumerate->add_flag("--ascii", ascii, "ASCII labels in DOT output");

  auto* hasse_cmd = app.add_subcommand("hasse", "Write the Hasse quiver as DOT");
  hasse_cmd->add_option("file", file, "Algebra file")->required();
  hasse_cmd->add_option("--out", out_path, "Output path, - for stdout")->required();
  hasse_cmd->add_flag("--tau-tilt-only", tilt_only, "Restrict to the tau-tilting modules");
  hasse_cmd->add_flag("--ascii", ascii, "ASCII labels");

  auto* reduce = app.add_subcommand("reduce", "Reduce by the socle of a projective-injective");
  reduce->add_option("file", file, "Algebra file")->required();
  reduce->add_option("--vertex", vertex, "Vertex v with P_v projective-injective (default: the first)");
  reduce->add_flag("--emit-quotient", emit_quotient, "Print the quotient algebra file");
  reduce->add_option("--out", out_path, "Write the quotient's Hasse quiver as DOT with N in red");
  reduce->add_flag("--ascii", ascii, "ASCII labels");

  auto* series = app.add_subcommand("series", "Count tau-tilting modules along the A or D series");
  series->add_option("--kind", kind, "A or D")->required()->check(CLI::IsMember({"A", "D"}));
  series->add_option("--max", n_max, "Largest n")->required()->check(CLI::PositiveNumber);
  series->add_flag("--closed-form", closed, "Show the closed form");

  auto* verify = app.add_subcommand("verify", "Run the full check suite");
  verify->add_option("file", file, "Algebra file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    const auto field = field_override(field_flag);

    if (*series) {
      const SeriesTable t = series_counts(parse_series_kind(kind), n_max);
      std::cout << emit_series(t, closed);
      return t.passed() ? kExitPass : kExitFail;
    }

    const Loaded l = load(file, field);
    const std::string name = l.file.name;

    if (*enumerate || *hasse_cmd) {
      const Inventory inv = inventory(l);
      const auto all = enumerate_stpairs(inv);
      PosetQuiver h = hasse(inv, all);
      std::vector<STPair> pairs = all;
      if (tilt_only) {
        std::vector<std::size_t> keep;
        pairs.clear();
        for (std::size_t i = 0; i < all.size(); ++i)
          if (all[i].is_tau_tilting) {
            keep.push_back(i);
            pairs.push_back(all[i]);
          }
        h = full_subquiver(h, keep);
      }
      const std::string dot = emit_dot(h, {tilting_flags(pairs), {}, ascii});
      if (*hasse_cmd) {
        write_out(out_path, dot);
      } else if (format == "json") {
        std::cout << emit_json(name, inv, pairs, h);
      } else if (format == "dot") {
        std::cout << dot;
      } else {
        std::cout << emit_table(name, inv, pairs);
      }
      return kExitPass;
    }

    if (*reduce) {
      const auto pis = find_proj_injectives(l.algebra);
      if (pis.empty()) throw Error(ErrorKind::NoProjInjective, "the algebra has no projective-injective module");
      std::size_t v = pis.front().vertex;
      if (!vertex.empty()) v = l.algebra->quiver().vertex_index(vertex);
      const ReductionContext ctx = socle_quotient(l.algebra, v, l.backend);
      const Quiver& q = l.algebra->quiver();
      const std::string bar_name = name + "_bar";
      if (emit_quotient) std::cout << emit_algebra_file(describe_algebra(*ctx.bar_algebra(), bar_name)) << "\n";

      const auto bar_pairs = enumerate_stpairs(ctx.bar_inv);
      const NSets ns = compute_nsets(ctx, bar_pairs);
      std::cout << "Q = P" << q.vertex_label(v) << " = " << ctx.inv.record(ctx.q_id).name << ", socle at vertex "
                << q.vertex_label(ctx.socle_vertex) << "\n";
      std::cout << "quotient " << bar_name << ": dimension " << ctx.bar_algebra()->dim() << ", "
                << ctx.bar_inv.size() << " indecomposables, " << bar_pairs.size() << " pairs\n";
      auto show = [&](const std::string& label, const std::vector<STPair>& ps) {
        std::cout << label << " (" << ps.size() << "):";
        for (const auto& p : ps) std::cout << " " << pair_label(ctx.bar_inv, p);
        std::cout << "\n";
      };
      show("N1", ns.n1);
      show("N2 = N", ns.n2);
      show("N3", ns.n3);
      show("N1 support", ns.n1_support);

      if (!out_path.empty()) {
        std::vector<bool> red(bar_pairs.size(), false);
        for (std::size_t i = 0; i < bar_pairs.size(); ++i)
          red[i] = std::find(ns.n2.begin(), ns.n2.end(), bar_pairs[i]) != ns.n2.end();
        write_out(out_path, emit_dot(hasse(ctx.bar_inv, bar_pairs), {tilting_flags(bar_pairs), red, ascii}));
      }

      Report r;
      r.algebra = name;
      run_reduction_checks(ctx, r);
      std::cout << emit_report(r);
      return fail_with(r);
    }

    if (*verify) {
      const Report r = verify_algebra(l.algebra, l.backend, name);
      std::cout << emit_report(r);
      return fail_with(r);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Parse ? kExitUsage : kExitFail;
  }
  return kExitUsage;
}
