#include "commands.hpp"

#include "refs.hpp"
#include "workspace.hpp"

#include "cyclic/catalog.hpp"
#include "cyclic/constructions.hpp"
#include "cyclic/errors.hpp"
#include "cyclic/forms.hpp"
#include "cyclic/structure.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>

namespace cyclic::cli {

namespace {

struct Output {
    bool json = false;
    bool meta = false;
    std::string out_file;
};

void add_output_flags(CLI::App* sub, Output& o) {
    sub->add_flag("--json", o.json, "emit the machine-readable certificate on stdout");
    sub->add_flag("--meta", o.meta, "attach a provenance block to the certificate");
    sub->add_option("-o,--output", o.out_file, "also write the certificate to a file");
}

std::string iso_now() {
    char buf[32];
    std::time_t t = std::time(nullptr);
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

void emit(const Output& o, Json doc, const std::string& human, std::ostream& out) {
    if (o.meta)
        doc["meta"] = Json{{"tool", "cyclic"}, {"version", "1.0.0"}, {"generated_at", iso_now()}};
    if (o.json)
        out << doc.dump(2) << "\n";
    else
        out << human;
    if (!o.out_file.empty()) {
        std::ofstream f(o.out_file);
        if (!f) throw ParseError("cannot write '" + o.out_file + "'");
        f << doc.dump(2) << "\n";
    }
}

// "2 X + Y - 1/2 H" style rendering of a coordinate vector.
std::string combo(const Vector& v, const std::vector<std::string>& names) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        const Rational a = abs(v[i]);
        if (first) {
            if (v[i].sign() < 0) os << "-";
            first = false;
        } else {
            os << (v[i].sign() < 0 ? " - " : " + ");
        }
        if (!a.is_one()) os << a.str() << " ";
        os << names[i];
    }
    if (first) os << "0";
    return os.str();
}

std::string signature_str(const Signature& s) {
    std::ostringstream os;
    os << "(" << s.positive << ", " << s.negative << ", " << s.null << ")";
    return os.str();
}

Json signature_json(const Signature& s) {
    return Json::array({s.positive, s.negative, s.null});
}

std::string bracket_table(const LieAlgebra& g) {
    std::ostringstream os;
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j) {
            const Vector v = g.bracket_basis(i, j);
            if (cyclic::is_zero(v)) continue;
            os << "  [" << g.names()[i] << ", " << g.names()[j] << "] = "
               << combo(v, g.names()) << "\n";
        }
    return os.str();
}

std::string dims_line(const std::vector<Subspace>& series) {
    std::ostringstream os;
    for (std::size_t i = 0; i < series.size(); ++i) os << (i ? " " : "") << series[i].dim();
    return os.str();
}

// Certificate block shared by all constructors.
void metric_result(Json& doc, std::ostringstream& human, const std::string& command,
                   const MetricAlgebra& ma) {
    const Signature sig = signature(ma.form().matrix());
    const std::size_t radical = form_radical(ma.algebra(), ma.form()).dim();
    doc["algebras"]["result"] = algebra_to_json(ma.algebra());
    doc["forms"]["result_form"] = form_to_json(ma.form(), "result");
    doc["certificate"] =
        Json{{"command", command},          {"dim", ma.dim()},
             {"validate_ok", true},         {"cyclic", true},
             {"radical_dim", radical},      {"signature", signature_json(sig)}};
    human << "result: dim " << ma.dim() << "\n"
          << "validate: ok\ncyclic: ok\n"
          << "radical dimension: " << radical << "\n"
          << "signature: " << signature_str(sig) << "\n"
          << "brackets:\n"
          << bracket_table(ma.algebra());
}

struct FormSpaceArgs {
    std::string ref;
    Output out;
};

int run_form_space(const std::string& command, const FormSpaceArgs& a, std::ostream& out) {
    const AlgebraRef alg = resolve_algebra(a.ref);
    const FormSpace space = command == "cyclic-space" ? cyclic_space(alg.algebra)
                                                      : invariant_space(alg.algebra);
    std::ostringstream human;
    human << "algebra: " << alg.display << " (dim " << alg.algebra.dim() << ")\n"
          << "system: " << space.system.equations << " equations, " << space.system.unknowns
          << " unknowns, rank " << space.system.rank << "\n"
          << "dimension: " << space.dimension() << "\n";
    Json doc;
    doc["algebras"]["g"] = algebra_to_json(alg.algebra);
    doc["forms"] = Json::object();
    for (std::size_t t = 0; t < space.basis.size(); ++t) {
        human << "basis " << t + 1 << ":\n" << to_string(space.basis[t].matrix()) << "\n";
        doc["forms"]["basis" + std::to_string(t + 1)] = form_to_json(space.basis[t], "g");
    }
    doc["certificate"] = Json{{"command", command},
                              {"input", a.ref},
                              {"system",
                               Json{{"equations", space.system.equations},
                                    {"unknowns", space.system.unknowns},
                                    {"rank", space.system.rank}}},
                              {"dimension", space.dimension()}};
    emit(a.out, std::move(doc), human.str(), out);
    return 0;
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computation with cyclic metric Lie algebras"};
    app.name("cyclic");
    app.require_subcommand(1);
    int exit_code = 0;

    // catalog
    struct {
        std::string id;
        bool list = false;
        Output out;
    } catalog_args;
    auto* catalog_cmd = app.add_subcommand("catalog", "emit a built-in algebra by name");
    catalog_cmd->add_option("name", catalog_args.id, "catalog identifier, e.g. sl2, abelian3");
    catalog_cmd->add_flag("--list", catalog_args.list, "list catalog families");
    add_output_flags(catalog_cmd, catalog_args.out);
    catalog_cmd->callback([&] {
        if (catalog_args.list) {
            for (const auto& f : catalog_families()) out << f << "\n";
            return;
        }
        if (catalog_args.id.empty()) throw ParseError("catalog needs a name or --list");
        const CatalogEntry entry = make_by_id(catalog_args.id);
        std::ostringstream human;
        human << "name: " << entry.name << "\n"
              << "dim: " << entry.algebra.dim() << "\n"
              << "basis:";
        for (const auto& n : entry.algebra.names()) human << " " << n;
        human << "\nbrackets:\n" << bracket_table(entry.algebra);
        Json doc;
        doc["algebras"][entry.name] = algebra_to_json(entry.algebra);
        if (entry.distinguished_form) {
            doc["forms"][entry.name + "_form"] =
                form_to_json(*entry.distinguished_form, entry.name);
            human << "distinguished form:\n"
                  << to_string(entry.distinguished_form->matrix()) << "\n";
        }
        Json subs = Json::object();
        auto annotate = [&](const char* key, const std::optional<Subspace>& s) {
            if (!s) return;
            subs[key] = subspace_to_json(*s, entry.name);
            human << key << " dimension: " << s->dim() << "\n";
        };
        annotate("levi", entry.levi);
        annotate("radical", entry.radical);
        annotate("nilradical", entry.nilradical);
        if (!subs.empty()) doc["subspaces"] = std::move(subs);
        if (entry.natural_rep)
            doc["representations"][entry.name + "_natural"] =
                representation_to_json(*entry.natural_rep, entry.name);
        doc["certificate"] = Json{{"command", "catalog"}, {"name", entry.name},
                                  {"validate_ok", entry.algebra.validate().ok}};
        emit(catalog_args.out, std::move(doc), human.str(), out);
    });

    // validate
    struct {
        std::string ref;
        Output out;
    } validate_args;
    auto* validate_cmd = app.add_subcommand("validate", "check antisymmetry and the Jacobi identity");
    validate_cmd->add_option("algebra", validate_args.ref, "algebra reference")->required();
    add_output_flags(validate_cmd, validate_args.out);
    validate_cmd->callback([&] {
        const AlgebraRef alg = resolve_algebra(validate_args.ref);
        const ValidationReport report = alg.algebra.validate();
        std::ostringstream human;
        human << "algebra: " << alg.display << " (dim " << alg.algebra.dim() << ")\n"
              << "validate: " << (report.ok ? "ok" : "FAILED") << "\n";
        Json anti = Json::array(), jac = Json::array();
        for (const auto& p : report.antisymmetry_failures) {
            human << "antisymmetry fails at (" << alg.algebra.names()[p.first] << ", "
                  << alg.algebra.names()[p.second] << ")\n";
            anti.push_back(Json::array(
                {alg.algebra.names()[p.first], alg.algebra.names()[p.second]}));
        }
        for (const auto& t : report.jacobi_failures) {
            human << "jacobi fails at (" << alg.algebra.names()[t.i] << ", "
                  << alg.algebra.names()[t.j] << ", " << alg.algebra.names()[t.k] << ")\n";
            jac.push_back(Json::array({alg.algebra.names()[t.i], alg.algebra.names()[t.j],
                                       alg.algebra.names()[t.k]}));
        }
        Json doc;
        doc["algebras"]["g"] = algebra_to_json(alg.algebra);
        doc["certificate"] = Json{{"command", "validate"},
                                  {"input", validate_args.ref},
                                  {"validate_ok", report.ok},
                                  {"antisymmetry_failures", std::move(anti)},
                                  {"jacobi_failures", std::move(jac)}};
        emit(validate_args.out, std::move(doc), human.str(), out);
        if (!report.ok) exit_code = 1;
    });

    // cyclic-space / invariant-space
    FormSpaceArgs cyclic_space_args, invariant_space_args;
    auto* cyclic_space_cmd =
        app.add_subcommand("cyclic-space", "solve for all cyclic metrics on an algebra");
    cyclic_space_cmd->add_option("algebra", cyclic_space_args.ref, "algebra reference")
        ->required();
    add_output_flags(cyclic_space_cmd, cyclic_space_args.out);
    cyclic_space_cmd->callback(
        [&] { run_form_space("cyclic-space", cyclic_space_args, out); });
    auto* invariant_space_cmd =
        app.add_subcommand("invariant-space", "solve for all ad-invariant metrics");
    invariant_space_cmd->add_option("algebra", invariant_space_args.ref, "algebra reference")
        ->required();
    add_output_flags(invariant_space_cmd, invariant_space_args.out);
    invariant_space_cmd->callback(
        [&] { run_form_space("invariant-space", invariant_space_args, out); });

    // quadruple-space
    struct {
        std::string rep;
        Output out;
    } quad_space_args;
    auto* quad_space_cmd =
        app.add_subcommand("quadruple-space", "solve the quadruple identity for rho");
    quad_space_cmd->add_option("rep", quad_space_args.rep, "representation reference")
        ->required();
    add_output_flags(quad_space_cmd, quad_space_args.out);
    quad_space_cmd->callback([&] {
        const RepRef rep = resolve_rep(quad_space_args.rep);
        const RhoSpace space = quadruple_space(rep.rep);
        std::ostringstream human;
        human << "representation: " << rep.display << " (algebra dim "
              << rep.rep.algebra().dim() << ", module dim " << rep.rep.module_dim() << ")\n"
              << "system: " << space.system.equations << " equations, "
              << space.system.unknowns << " unknowns, rank " << space.system.rank << "\n"
              << "dimension: " << space.basis.size() << "\n";
        Json doc;
        doc["matrices"] = Json::object();
        for (std::size_t t = 0; t < space.basis.size(); ++t) {
            human << "rho " << t + 1 << ":\n" << to_string(space.basis[t]) << "\n";
            doc["matrices"]["rho" + std::to_string(t + 1)] =
                Json{{"rows", matrix_to_json(space.basis[t])}};
        }
        doc["certificate"] = Json{{"command", "quadruple-space"},
                                  {"input", quad_space_args.rep},
                                  {"system",
                                   Json{{"equations", space.system.equations},
                                        {"unknowns", space.system.unknowns},
                                        {"rank", space.system.rank}}},
                                  {"dimension", space.basis.size()}};
        emit(quad_space_args.out, std::move(doc), human.str(), out);
    });

    // signature / index
    struct {
        std::string ref;
        Output out;
    } signature_args, index_args;
    auto* signature_cmd = app.add_subcommand("signature", "inertia of a symmetric form");
    signature_cmd->add_option("form", signature_args.ref, "form reference")->required();
    add_output_flags(signature_cmd, signature_args.out);
    signature_cmd->callback([&] {
        const FormRef f = resolve_form(signature_args.ref);
        const Signature sig = signature(f.form.matrix());
        Json doc;
        doc["certificate"] = Json{{"command", "signature"},
                                  {"input", signature_args.ref},
                                  {"signature", signature_json(sig)}};
        emit(signature_args.out, std::move(doc),
             "signature: " + signature_str(sig) + "\n", out);
    });
    auto* index_cmd = app.add_subcommand("index", "maximal isotropic dimension of a form");
    index_cmd->add_option("form", index_args.ref, "form reference")->required();
    add_output_flags(index_cmd, index_args.out);
    index_cmd->callback([&] {
        const FormRef f = resolve_form(index_args.ref);
        const std::size_t idx = index_of(f.form);
        Json doc;
        doc["certificate"] =
            Json{{"command", "index"}, {"input", index_args.ref}, {"index", idx}};
        emit(index_args.out, std::move(doc), "index: " + std::to_string(idx) + "\n", out);
    });

    // series / center
    struct {
        std::string ref;
        Output out;
    } series_args, center_args;
    auto* series_cmd = app.add_subcommand("series", "derived, lower and upper central series");
    series_cmd->add_option("algebra", series_args.ref, "algebra reference")->required();
    add_output_flags(series_cmd, series_args.out);
    series_cmd->callback([&] {
        const AlgebraRef alg = resolve_algebra(series_args.ref);
        const auto derived = derived_series(alg.algebra);
        const auto lower = lower_central_series(alg.algebra);
        const auto upper = upper_central_series(alg.algebra);
        std::ostringstream human;
        human << "algebra: " << alg.display << " (dim " << alg.algebra.dim() << ")\n"
              << "derived series dims: " << dims_line(derived) << "\n"
              << "lower central series dims: " << dims_line(lower) << "\n"
              << "upper central series dims: " << dims_line(upper) << "\n";
        Json doc;
        doc["algebras"]["g"] = algebra_to_json(alg.algebra);
        auto series_json = [&](const std::vector<Subspace>& s, const std::string& key) {
            Json dims = Json::array();
            for (const auto& t : s) dims.push_back(t.dim());
            doc["certificate"][key]["dims"] = std::move(dims);
            for (std::size_t i = 0; i < s.size(); ++i)
                doc["subspaces"][key + std::to_string(i)] = subspace_to_json(s[i], "g");
        };
        doc["certificate"] = Json{{"command", "series"}, {"input", series_args.ref}};
        series_json(derived, "derived");
        series_json(lower, "lower_central");
        series_json(upper, "upper_central");
        emit(series_args.out, std::move(doc), human.str(), out);
    });
    auto* center_cmd = app.add_subcommand("center", "center of an algebra");
    center_cmd->add_option("algebra", center_args.ref, "algebra reference")->required();
    add_output_flags(center_cmd, center_args.out);
    center_cmd->callback([&] {
        const AlgebraRef alg = resolve_algebra(center_args.ref);
        const Subspace c = center(alg.algebra);
        std::ostringstream human;
        human << "algebra: " << alg.display << " (dim " << alg.algebra.dim() << ")\n"
              << "center dimension: " << c.dim() << "\n";
        if (c.dim() > 0) human << "basis:\n" << to_string(c.basis()) << "\n";
        Json doc;
        doc["algebras"]["g"] = algebra_to_json(alg.algebra);
        doc["subspaces"]["center"] = subspace_to_json(c, "g");
        doc["certificate"] = Json{{"command", "center"},
                                  {"input", center_args.ref},
                                  {"dimension", c.dim()}};
        emit(center_args.out, std::move(doc), human.str(), out);
    });

    // split
    struct {
        std::string form, ideal;
        Output out;
    } split_args;
    auto* split_cmd =
        app.add_subcommand("split", "split a cyclic metric algebra along a nondegenerate ideal");
    split_cmd->add_option("form", split_args.form, "form reference (fixes the algebra)")
        ->required();
    split_cmd->add_option("--ideal", split_args.ideal, "ideal subspace reference")->required();
    add_output_flags(split_cmd, split_args.out);
    split_cmd->callback([&] {
        const FormRef f = resolve_form(split_args.form);
        const SubspaceRef ideal = resolve_subspace(split_args.ideal, f.algebra);
        const SplitResult split = split_along_ideal(f.algebra, f.form, ideal.subspace);
        const bool rebuilt = split_reconstructs(f.algebra, ideal.subspace, split);
        std::ostringstream human;
        human << "algebra: " << f.display << " (dim " << f.algebra.dim() << ")\n"
              << "ideal dimension: " << ideal.subspace.dim() << "\n"
              << "complement dimension: " << split.complement.dim() << "\n"
              << "complement basis:\n"
              << to_string(split.complement.basis()) << "\n"
              << "reconstruction: " << (rebuilt ? "ok" : "FAILED") << "\n";
        Json doc;
        doc["algebras"]["g"] = algebra_to_json(f.algebra);
        doc["algebras"]["complement"] = algebra_to_json(split.complement_algebra);
        doc["algebras"]["ideal"] = algebra_to_json(split.ideal_algebra);
        doc["subspaces"]["complement"] = subspace_to_json(split.complement, "g");
        doc["subspaces"]["ideal"] = subspace_to_json(ideal.subspace, "g");
        doc["representations"]["action"] =
            representation_to_json(split.action, "complement");
        doc["certificate"] = Json{{"command", "split"},
                                  {"input", split_args.form},
                                  {"ideal", split_args.ideal},
                                  {"reconstruction_ok", rebuilt}};
        emit(split_args.out, std::move(doc), human.str(), out);
        if (!rebuilt) exit_code = 1;
    });

    // check-abc
    struct {
        std::string form, h, i;
        Output out;
    } abc_args;
    auto* abc_cmd = app.add_subcommand(
        "check-abc", "decomposition criterion for a subalgebra + ideal vector-space split");
    abc_cmd->add_option("form", abc_args.form, "form reference (fixes the algebra)")->required();
    abc_cmd->add_option("--subalgebra", abc_args.h, "subalgebra subspace reference")->required();
    abc_cmd->add_option("--ideal", abc_args.i, "ideal subspace reference")->required();
    add_output_flags(abc_cmd, abc_args.out);
    abc_cmd->callback([&] {
        const FormRef f = resolve_form(abc_args.form);
        const SubspaceRef h = resolve_subspace(abc_args.h, f.algebra);
        const SubspaceRef i = resolve_subspace(abc_args.i, f.algebra);
        const AbcReport report = check_abc(f.algebra, f.form, h.subspace, i.subspace);
        std::ostringstream human;
        human << "a_ok: " << (report.a_ok ? "true" : "false") << "\n"
              << "b_ok: " << (report.b_ok ? "true" : "false") << "\n"
              << "c_ok: " << (report.c_ok ? "true" : "false") << "\n";
        Json doc;
        doc["certificate"] = Json{{"command", "check-abc"}, {"input", abc_args.form},
                                  {"a_ok", report.a_ok},    {"b_ok", report.b_ok},
                                  {"c_ok", report.c_ok}};
        emit(abc_args.out, std::move(doc), human.str(), out);
    });

    // semidirect
    struct {
        std::string left, right, rep;
        Output out;
    } semidirect_args;
    auto* semidirect_cmd =
        app.add_subcommand("semidirect", "orthogonal semidirect product of two metric algebras");
    semidirect_cmd->add_option("--left", semidirect_args.left, "acting metric algebra (form ref)")
        ->required();
    semidirect_cmd->add_option("--right", semidirect_args.right, "target metric algebra (form ref)")
        ->required();
    semidirect_cmd->add_option("--rep", semidirect_args.rep, "action of left on right")
        ->required();
    add_output_flags(semidirect_cmd, semidirect_args.out);
    semidirect_cmd->callback([&] {
        const FormRef left = resolve_form(semidirect_args.left);
        const FormRef right = resolve_form(semidirect_args.right);
        const RepRef rep = resolve_rep(semidirect_args.rep);
        const MetricAlgebra result = semidirect(MetricAlgebra(left.algebra, left.form),
                                                MetricAlgebra(right.algebra, right.form),
                                                rep.rep);
        Json doc;
        std::ostringstream human;
        metric_result(doc, human, "semidirect", result);
        emit(semidirect_args.out, std::move(doc), human.str(), out);
    });

    // quad-extend
    struct {
        std::string adjoint, rep, rho, bg;
        Output out;
    } quad_extend_args;
    auto* quad_extend_cmd =
        app.add_subcommand("quad-extend", "extend an algebra by a module through a quadruple");
    quad_extend_cmd->add_option("--adjoint", quad_extend_args.adjoint,
                                "form ref: use the adjoint quadruple of this metric algebra");
    quad_extend_cmd->add_option("--rep", quad_extend_args.rep, "representation reference");
    quad_extend_cmd->add_option("--rho", quad_extend_args.rho, "matrix reference for rho");
    quad_extend_cmd->add_option("--bg", quad_extend_args.bg,
                                "cyclic form on the algebra (default: zero, or the adjoint form)");
    add_output_flags(quad_extend_cmd, quad_extend_args.out);
    quad_extend_cmd->callback([&] {
        Json doc;
        std::ostringstream human;
        if (!quad_extend_args.adjoint.empty()) {
            const FormRef f = resolve_form(quad_extend_args.adjoint);
            const Quadruple q = adjoint_quadruple(f.algebra, f.form);
            const BilinearForm bg = quad_extend_args.bg.empty()
                                        ? f.form
                                        : resolve_form(quad_extend_args.bg).form;
            metric_result(doc, human, "quad-extend", quadruple_extension(q, bg));
        } else {
            if (quad_extend_args.rep.empty() || quad_extend_args.rho.empty())
                throw ParseError("quad-extend needs --adjoint, or --rep together with --rho");
            const RepRef rep = resolve_rep(quad_extend_args.rep);
            const Matrix rho = resolve_matrix(quad_extend_args.rho);
            const Quadruple q(rep.rep, rho);
            const BilinearForm bg = quad_extend_args.bg.empty()
                                        ? BilinearForm::zero(rep.rep.algebra().dim())
                                        : resolve_form(quad_extend_args.bg).form;
            metric_result(doc, human, "quad-extend", quadruple_extension(q, bg));
        }
        emit(quad_extend_args.out, std::move(doc), human.str(), out);
    });

    // double-extend
    struct {
        std::string h, s, rep, theta, btilde;
        bool derive_theta = false;
        Output out;
    } double_extend_args;
    auto* double_extend_cmd =
        app.add_subcommand("double-extend", "double extension of h with respect to s");
    double_extend_cmd->add_option("base", double_extend_args.h, "metric algebra h (form ref)")
        ->required();
    double_extend_cmd->add_option("--ext", double_extend_args.s, "metric algebra s (form ref)")
        ->required();
    double_extend_cmd->add_option("--rep", double_extend_args.rep, "action of s on h")
        ->required();
    double_extend_cmd->add_option("--theta", double_extend_args.theta, "cocycle reference");
    double_extend_cmd->add_flag("--derive-theta", double_extend_args.derive_theta,
                                "derive the cocycle from the compatibility identity");
    double_extend_cmd->add_option("--btilde", double_extend_args.btilde,
                                  "cyclic form on s (default: zero)");
    add_output_flags(double_extend_cmd, double_extend_args.out);
    double_extend_cmd->callback([&] {
        const FormRef hf = resolve_form(double_extend_args.h);
        const FormRef sf = resolve_form(double_extend_args.s);
        const RepRef rep = resolve_rep(double_extend_args.rep);
        const MetricAlgebra h(hf.algebra, hf.form);
        const MetricAlgebra s(sf.algebra, sf.form);
        Cocycle2 theta;
        if (double_extend_args.derive_theta) {
            theta = derive_cocycle(h, s, rep.rep);
        } else if (!double_extend_args.theta.empty()) {
            theta = resolve_cocycle(double_extend_args.theta).cocycle;
        } else {
            throw ParseError("double-extend needs --theta or --derive-theta");
        }
        const BilinearForm btilde = double_extend_args.btilde.empty()
                                        ? BilinearForm::zero(s.dim())
                                        : resolve_form(double_extend_args.btilde).form;
        Json doc;
        std::ostringstream human;
        metric_result(doc, human, "double-extend",
                      double_extension(h, s, rep.rep, theta, btilde));
        doc["cocycles"]["theta"] =
            cocycle_to_json(theta, "h", h.algebra().names());
        emit(double_extend_args.out, std::move(doc), human.str(), out);
    });

    // central-extend-1d
    struct {
        std::string h, theta;
        Output out;
    } cde_args;
    auto* cde_cmd = app.add_subcommand("central-extend-1d",
                                       "one-dimensional central double extension");
    cde_cmd->add_option("base", cde_args.h, "metric algebra h (form ref)")->required();
    cde_cmd->add_option("--theta", cde_args.theta, "scalar cocycle reference")->required();
    add_output_flags(cde_cmd, cde_args.out);
    cde_cmd->callback([&] {
        const FormRef hf = resolve_form(cde_args.h);
        const MetricAlgebra h(hf.algebra, hf.form);
        const Cocycle2 theta = resolve_cocycle(cde_args.theta).cocycle;
        Json doc;
        std::ostringstream human;
        metric_result(doc, human, "central-extend-1d", central_double_extension_1d(h, theta));
        emit(cde_args.out, std::move(doc), human.str(), out);
    });

    // reduce-central
    struct {
        std::string g, z;
        Output out;
    } reduce_args;
    auto* reduce_cmd = app.add_subcommand(
        "reduce-central", "invert a one-dimensional central double extension at z");
    reduce_cmd->add_option("input", reduce_args.g, "metric algebra (form ref)")->required();
    reduce_cmd->add_option("--z", reduce_args.z,
                           "isotropic central vector: comma rationals or a basis name")
        ->required();
    add_output_flags(reduce_cmd, reduce_args.out);
    reduce_cmd->callback([&] {
        const FormRef gf = resolve_form(reduce_args.g);
        const MetricAlgebra g(gf.algebra, gf.form);
        const Vector z = resolve_vector(reduce_args.z, gf.algebra);
        const CentralReduction red = reduce_central(g, z);
        std::ostringstream human;
        human << "reduced dimension: " << red.reduced.dim() << "\n"
              << "reduced form:\n"
              << to_string(red.reduced.form().matrix()) << "\n"
              << "theta:\n"
              << to_string(red.cocycle.as_matrix()) << "\n"
              << "x choice: ";
        for (std::size_t i = 0; i < red.x_choice.size(); ++i)
            human << (i ? " " : "") << red.x_choice[i].str();
        human << "\nbrackets:\n" << bracket_table(red.reduced.algebra());
        Json doc;
        doc["algebras"]["reduced"] = algebra_to_json(red.reduced.algebra());
        doc["forms"]["reduced_form"] = form_to_json(red.reduced.form(), "reduced");
        doc["cocycles"]["theta"] =
            cocycle_to_json(red.cocycle, "reduced", red.reduced.algebra().names());
        doc["subspaces"]["complement"] = subspace_to_json(red.complement, "reduced");
        doc["certificate"] = Json{{"command", "reduce-central"},
                                  {"input", reduce_args.g},
                                  {"dim", red.reduced.dim()},
                                  {"x_choice", vector_to_json(red.x_choice)}};
        emit(reduce_args.out, std::move(doc), human.str(), out);
    });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

} // namespace cyclic::cli
