#include <cstdio>
#include <filesystem>
#include <iostream>
#include <variant>

#include "CLI11.hpp"
#include "homcheck/checks.hpp"
#include "homcheck/construct.hpp"
#include "homcheck/deformation.hpp"
#include "homcheck/fixtures.hpp"
#include "homcheck/graded.hpp"
#include "homcheck/io.hpp"
#include "homcheck/operators.hpp"
#include "homcheck/scan.hpp"

// homcheck: verify Hom-algebraic structures given as exact rational
// structure constants, and run the constructions that produce new ones.
//
// Exit codes: 0 all identities hold, 1 a checked identity fails (the report
// says which equation and where), 2 validation or I/O problems.

namespace {

using namespace homcheck;
namespace fs = std::filesystem;

struct Options {
  bool force = false;
  bool all = false;
  bool json_report = false;
  int jobs = 0;
  std::string checker;
  std::string variant = "eq45";
  int order = -1;
  int bound = 1;
  std::string endo_path;
  std::string output;
};

CheckOptions check_options(const Options& o) { return {o.force, o.all}; }

int render_report(const CheckReport& r, const Options& o) {
  if (o.json_report)
    std::cout << io::report_to_json(r);
  else
    std::cout << r.str() << (r.passed() ? "\n" : "");
  return r.passed() ? 0 : 1;
}

Kind single_kind_from(const std::string& name) {
  for (Kind k : {Kind::hom_associative, Kind::commutative_hom_associative,
                 Kind::hom_lie, Kind::hom_pre_lie, Kind::hom_zinbiel,
                 Kind::hom_permutative, Kind::hom_leibniz})
    if (kind_name(k) == name) return k;
  throw validation_error("unknown single-product kind \"" + name + "\"");
}

PairKind pair_kind_from(const std::string& name) {
  for (PairKind k : {PairKind::hom_poisson, PairKind::hom_pre_poisson,
                     PairKind::hom_dendriform, PairKind::dual_hom_pre_poisson})
    if (kind_name(k) == name) return k;
  throw validation_error("unknown two-product kind \"" + name + "\"");
}

CocycleVariant variant_from(const std::string& v) {
  if (v == "eq45") return CocycleVariant::eq45;
  if (v == "proofline") return CocycleVariant::proofline;
  throw validation_error("unknown variant \"" + v + "\" (eq45|proofline)");
}

int run_check(const std::string& path, const Options& o) {
  const io::Document doc = io::load_file(path);
  const CheckOptions co = check_options(o);

  return std::visit(
      [&](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, HomAlgebra>) {
          HomAlgebra a = v;
          if (!o.checker.empty()) {
            const Kind requested = single_kind_from(o.checker);
            if (requested != a.kind && !o.force)
              throw kind_error("document is " + kind_name(a.kind) +
                               "; pass --force to run the " + o.checker +
                               " checker");
            a.kind = requested;
          }
          return render_report(check_by_kind(a, co), o);
        } else if constexpr (std::is_same_v<T, HomTwoProductAlgebra>) {
          HomTwoProductAlgebra a = v;
          if (!o.checker.empty()) {
            const PairKind requested = pair_kind_from(o.checker);
            if (requested != a.kind && !o.force)
              throw kind_error("document is " + kind_name(a.kind) +
                               "; pass --force to run the " + o.checker +
                               " checker");
            a.kind = requested;
          }
          return render_report(check_by_kind(a, co), o);
        } else if constexpr (std::is_same_v<T, GradedAlgebra>) {
          return render_report(v.kind == GradedKind::hom_gerstenhaber
                                   ? check_hom_gerstenhaber(v, co)
                                   : check_hom_pre_gerstenhaber(v, co),
                               o);
        } else if constexpr (std::is_same_v<T, Representation>) {
          return render_report(v.algebra.kind == Kind::hom_lie
                                   ? check_rep_lie(v, co)
                                   : check_rep_comm_assoc(v, co),
                               o);
        } else if constexpr (std::is_same_v<T, PoissonRepresentation>) {
          return render_report(check_rep_poisson(v, co), o);
        } else if constexpr (std::is_same_v<T, io::OperatorDocument>) {
          if (const auto* rep = std::get_if<Representation>(&v.rep)) {
            return render_report(rep->algebra.kind == Kind::hom_lie
                                     ? check_o_operator_lie(*rep, v.matrix, co)
                                     : check_o_operator_comm(*rep, v.matrix, co),
                                 o);
          }
          return render_report(
              check_o_operator_poisson(
                  std::get<PoissonRepresentation>(v.rep), v.matrix, co),
              o);
        } else if constexpr (std::is_same_v<T, io::OperatorListDocument>) {
          throw validation_error("check a single operator document, not a list");
        } else if constexpr (std::is_same_v<T, io::AverageOperatorDocument>) {
          if (const auto* a = std::get_if<HomAlgebra>(&v.algebra))
            return render_report(check_average_operator(*a, v.matrix, co), o);
          return render_report(
              check_average_operator(std::get<HomTwoProductAlgebra>(v.algebra),
                                     v.matrix, co),
              o);
        } else if constexpr (std::is_same_v<T, io::CocycleDocument>) {
          return render_report(check_two_cocycle(v.algebra, v.cocycle, co), o);
        } else {
          static_assert(std::is_same_v<T, TruncatedDeformation>);
          return render_report(check_deformation(v, co, o.order), o);
        }
      },
      doc.value);
}

/// Fail-closed write: algebra outputs must pass their own checker first.
void write_checked(const std::string& path, io::DocumentValue value,
                   std::map<std::string, std::string> meta = {}) {
  io::Document doc{std::move(value), std::move(meta)};
  if (path.empty() || path == "-") {
    io::validate_document(doc);
    std::cout << io::serialize_document(doc);
  } else {
    io::write_validated(path, doc);
    std::cout << "wrote " << path << "\n";
  }
}

Matrix load_matrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return io::parse_matrix_file(ss.str());
}

HomTwoProductAlgebra load_pair(const std::string& path) {
  auto doc = io::load_file(path);
  if (auto* a = std::get_if<HomTwoProductAlgebra>(&doc.value))
    return std::move(*a);
  throw validation_error(path + ": expected a two-product algebra");
}

int run_construct(const std::string& op, const std::vector<std::string>& in,
                  const Options& o) {
  auto need = [&](std::size_t n) {
    if (in.size() != n)
      throw validation_error("construct " + op + " needs " +
                             std::to_string(n) + " input document(s)");
  };

  if (op == "subadjacent") {
    need(1);
    auto doc = io::load_file(in[0]);
    if (auto* a = std::get_if<HomAlgebra>(&doc.value)) {
      if (a->kind == Kind::hom_zinbiel)
        write_checked(o.output, subadjacent_commutative(*a));
      else if (a->kind == Kind::hom_pre_lie)
        write_checked(o.output, subadjacent_lie(*a));
      else
        throw validation_error("subadjacent expects zinbiel or pre-Lie input");
    } else if (auto* p = std::get_if<HomTwoProductAlgebra>(&doc.value)) {
      if (p->kind != PairKind::hom_pre_poisson)
        throw validation_error("subadjacent expects a pre-Poisson pair");
      write_checked(o.output, subadjacent_poisson(*p));
    } else if (auto* g = std::get_if<GradedAlgebra>(&doc.value)) {
      write_checked(o.output, subadjacent_gerstenhaber(*g));
    } else {
      throw validation_error("subadjacent expects an algebra document");
    }
    return 0;
  }
  if (op == "split") {
    need(1);
    const auto d = load_pair(in[0]);
    const auto split = dendriform_split(d);
    const std::string base = o.output.empty() ? "split" : o.output;
    write_checked(base + ".assoc.json", split.associative);
    write_checked(base + ".prelie.json", split.pre_lie);
    return 0;
  }
  if (op == "sum") {
    need(2);
    write_checked(o.output, direct_sum(load_pair(in[0]), load_pair(in[1])));
    return 0;
  }
  if (op == "semidirect") {
    need(2);
    const auto a = load_pair(in[0]);
    auto doc = io::load_file(in[1]);
    auto* rep = std::get_if<PoissonRepresentation>(&doc.value);
    if (!rep) throw validation_error(in[1] + ": expected a Poisson representation");
    write_checked(o.output, semidirect_product(a, *rep));
    return 0;
  }
  if (op == "twist") {
    need(1);
    if (o.endo_path.empty()) throw validation_error("twist needs --endo FILE");
    const Matrix endo = load_matrix(o.endo_path);
    auto doc = io::load_file(in[0]);
    if (auto* a = std::get_if<HomAlgebra>(&doc.value))
      write_checked(o.output, yau_twist(*a, endo));
    else if (auto* p = std::get_if<HomTwoProductAlgebra>(&doc.value))
      write_checked(o.output, yau_twist(*p, endo));
    else
      throw validation_error("twist expects an ungraded algebra document");
    return 0;
  }
  if (op == "untwist") {
    need(1);
    auto doc = io::load_file(in[0]);
    if (auto* a = std::get_if<HomAlgebra>(&doc.value))
      write_checked(o.output, untwist(*a));
    else if (auto* p = std::get_if<HomTwoProductAlgebra>(&doc.value))
      write_checked(o.output, untwist(*p));
    else
      throw validation_error("untwist expects an ungraded algebra document");
    return 0;
  }
  if (op == "induced-zinbiel" || op == "induced-prelie" ||
      op == "induced-prepoisson" || op == "image" || op == "compatible") {
    need(1);
    auto doc = io::load_file(in[0]);
    auto* opd = std::get_if<io::OperatorDocument>(&doc.value);
    if (!opd) throw validation_error(in[0] + ": expected an o-operator document");
    if (auto* rep = std::get_if<Representation>(&opd->rep)) {
      if (op == "induced-zinbiel")
        write_checked(o.output,
                      induced_zinbiel(OOperator::make(*rep, opd->matrix)));
      else if (op == "induced-prelie")
        write_checked(o.output,
                      induced_prelie(OOperator::make(*rep, opd->matrix)));
      else
        throw validation_error(op + " needs a Poisson o-operator");
      return 0;
    }
    const auto pop = PoissonOOperator::make(
        std::get<PoissonRepresentation>(opd->rep), opd->matrix);
    if (op == "induced-prepoisson")
      write_checked(o.output, induced_prepoisson(pop));
    else if (op == "image")
      write_checked(o.output, image_structure(pop).algebra);
    else if (op == "compatible")
      write_checked(o.output, compatible_from_invertible(pop));
    else
      throw validation_error(op + " applies to single-product o-operators");
    return 0;
  }
  if (op == "from-cocycle") {
    need(1);
    auto doc = io::load_file(in[0]);
    auto* cd = std::get_if<io::CocycleDocument>(&doc.value);
    if (!cd) throw validation_error(in[0] + ": expected a two-cocycle document");
    write_checked(o.output, prepoisson_from_cocycle(cd->algebra, cd->cocycle,
                                                    variant_from(o.variant)));
    return 0;
  }
  if (op == "induced-permutative" || op == "induced-leibniz" ||
      op == "induced-dual-prepoisson") {
    need(1);
    auto doc = io::load_file(in[0]);
    auto* ad = std::get_if<io::AverageOperatorDocument>(&doc.value);
    if (!ad)
      throw validation_error(in[0] + ": expected an average-operator document");
    if (auto* a = std::get_if<HomAlgebra>(&ad->algebra)) {
      const auto s = AverageOperator::make(ad->matrix, a->twist);
      if (op == "induced-permutative")
        write_checked(o.output, induced_permutative(*a, s));
      else if (op == "induced-leibniz")
        write_checked(o.output, induced_leibniz(*a, s));
      else
        throw validation_error(op + " needs a Hom-Poisson algebra");
      return 0;
    }
    const auto& a = std::get<HomTwoProductAlgebra>(ad->algebra);
    if (op != "induced-dual-prepoisson")
      throw validation_error(op + " needs a single-product algebra");
    write_checked(o.output,
                  induced_dual_prepoisson(
                      a, AverageOperator::make(ad->matrix, a.twist)));
    return 0;
  }
  if (op == "limit") {
    need(1);
    auto doc = io::load_file(in[0]);
    auto* d = std::get_if<TruncatedDeformation>(&doc.value);
    if (!d) throw validation_error(in[0] + ": expected a deformation document");
    write_checked(o.output, semiclassical_limit(*d));
    return 0;
  }
  throw validation_error("unknown construct operation \"" + op + "\"");
}

int run_dualize(const std::string& path, const Options& o) {
  auto doc = io::load_file(path);
  if (auto* r = std::get_if<Representation>(&doc.value)) {
    write_checked(o.output, r->algebra.kind == Kind::hom_lie
                                ? dual_rep_lie(*r)
                                : dual_rep_comm_assoc(*r));
    return 0;
  }
  if (auto* r = std::get_if<PoissonRepresentation>(&doc.value)) {
    write_checked(o.output, dual_rep_poisson(*r));
    return 0;
  }
  throw validation_error(path + ": expected a representation document");
}

int run_search(const std::string& path, const Options& o) {
  auto doc = io::load_file(path);
  io::OperatorListDocument out{{}, {}};
  if (auto* r = std::get_if<Representation>(&doc.value)) {
    const CheckOptions strict{false, false};
    out.rep = *r;
    for (const auto& op : search_o_operators(*r, o.bound)) {
      const auto again = r->algebra.kind == Kind::hom_lie
                             ? check_o_operator_lie(op, strict)
                             : check_o_operator_comm(op, strict);
      if (!again.passed()) throw error("search result failed re-verification");
      out.operators.push_back(op.T);
    }
  } else if (auto* r = std::get_if<PoissonRepresentation>(&doc.value)) {
    out.rep = *r;
    for (const auto& op : search_o_operators(*r, o.bound)) {
      if (!check_o_operator_poisson(op, {false, false}).passed())
        throw error("search result failed re-verification");
      out.operators.push_back(op.T);
    }
  } else {
    throw validation_error(path + ": expected a representation document");
  }
  std::cout << "found " << out.operators.size() << " operator(s)\n";
  if (!o.output.empty())
    io::write_file(o.output, io::Document{std::move(out), {}});
  return 0;
}

int run_fixtures(const Options& o) {
  const fs::path dir = o.output.empty() ? fs::path(".") : fs::path(o.output);
  fs::create_directories(dir);
  auto put = [&](const std::string& name, io::DocumentValue value) {
    io::write_file((dir / (name + ".json")).string(),
                   io::Document{std::move(value), {{"name", name}}});
  };
  for (const auto& [name, a] : fixtures::single_gallery()) put(name, a);
  for (const auto& [name, a] : fixtures::pair_gallery()) put(name, a);
  for (const auto& [name, g] : fixtures::graded_gallery()) put(name, g);
  for (const auto& q : fixtures::quantizable_gallery())
    put(q.name + "-cocycle", io::CocycleDocument{q.algebra, q.cocycle});
  put("d1", fixtures::d1());
  put("f1-regular-rep", regular_representation(fixtures::f1()));
  put("f1-poisson-regular-rep", regular_representation(fixtures::f1_poisson()));
  {
    Matrix shift(2, 2);
    shift(1, 0) = 1;
    put("f1-poisson-shift-operator",
        io::OperatorDocument{regular_representation(fixtures::f1_poisson()),
                             shift});
  }
  std::cout << "fixture gallery written to " << dir.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "homcheck: exact verification of Hom-Poisson-type structures and the "
      "constructions between them"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --jobs appear after the subcommand
  Options o;

  app.add_option("--jobs", o.jobs,
                 "worker threads for the identity scans (0 = default)");

  std::string input, op;
  std::vector<std::string> inputs;

  auto* check = app.add_subcommand("check", "verify the defining identities");
  check->add_option("input", input, "document to check")->required();
  check->add_option("--checker", o.checker, "run this kind's checker instead");
  check->add_flag("--force", o.force, "ignore the kind tag");
  check->add_flag("--all-violations", o.all, "collect every violation");
  check->add_flag("--json-report", o.json_report, "machine-readable report");
  check->add_option("--order", o.order, "check deformations up to this order");

  auto* construct = app.add_subcommand("construct",
                                       "build a derived structure");
  construct->add_option("op", op,
                        "subadjacent|split|sum|semidirect|twist|untwist|"
                        "induced-zinbiel|induced-prelie|induced-prepoisson|"
                        "image|compatible|from-cocycle|induced-permutative|"
                        "induced-leibniz|induced-dual-prepoisson|limit")
      ->required();
  construct->add_option("inputs", inputs, "input documents")->required();
  construct->add_option("--endo", o.endo_path, "endomorphism matrix file");
  construct->add_option("--variant", o.variant,
                        "Thm 5.10 bracket formula (eq45|proofline)");
  construct->add_option("--output", o.output, "output path (default stdout)");

  auto* dualize = app.add_subcommand("dualize", "dual representation");
  dualize->add_option("input", input, "representation document")->required();
  dualize->add_option("--output", o.output, "output path");

  auto* twist = app.add_subcommand("twist", "Yau twist by an endomorphism");
  twist->add_option("input", input, "algebra document")->required();
  twist->add_option("--endo", o.endo_path, "endomorphism matrix file")
      ->required();
  twist->add_option("--output", o.output, "output path");

  auto* untw = app.add_subcommand("untwist", "compose with the inverse twist");
  untw->add_option("input", input, "algebra document")->required();
  untw->add_option("--output", o.output, "output path");

  auto* defchk = app.add_subcommand("deform-check",
                                    "verify the deformation equations");
  defchk->add_option("input", input, "deformation document")->required();
  defchk->add_option("--order", o.order, "only check up to this order");
  defchk->add_flag("--all-violations", o.all, "collect every violation");
  defchk->add_flag("--json-report", o.json_report, "machine-readable report");

  auto* limit = app.add_subcommand("limit", "semi-classical limit");
  limit->add_option("input", input, "deformation document")->required();
  limit->add_option("--output", o.output, "output path");

  auto* search = app.add_subcommand("search", "grid search for o-operators");
  search->add_option("input", input, "representation document")->required();
  search->add_option("--bound", o.bound, "coefficient bound")->required();
  search->add_option("--output", o.output, "operator list output path");

  auto* fixtures_cmd = app.add_subcommand("fixtures",
                                          "emit the built-in gallery");
  fixtures_cmd->add_option("--output", o.output, "directory (default .)");

  CLI11_PARSE(app, argc, argv);

  try {
    set_jobs(o.jobs);
    if (o.jobs == 1) set_default_exec(Exec::serial);
    if (check->parsed()) return run_check(input, o);
    if (construct->parsed()) return run_construct(op, inputs, o);
    if (dualize->parsed()) return run_dualize(input, o);
    if (twist->parsed()) {
      return run_construct("twist", {input}, o);
    }
    if (untw->parsed()) return run_construct("untwist", {input}, o);
    if (defchk->parsed()) return run_check(input, o);
    if (limit->parsed()) return run_construct("limit", {input}, o);
    if (search->parsed()) return run_search(input, o);
    if (fixtures_cmd->parsed()) return run_fixtures(o);
  } catch (const precondition_error& e) {
    std::cerr << "FAIL (precondition): " << e.what() << "\n";
    return 1;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
