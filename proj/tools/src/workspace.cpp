#include "workspace.hpp"

#include "cyclic/errors.hpp"

#include <fstream>
#include <sstream>

namespace cyclic::cli {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError("at " + path + ": " + what);
}

const Json& need(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path, "missing field '" + key + "'");
    return *it;
}

std::string need_string(const Json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

std::size_t need_count(const Json& j, const std::string& path) {
    if (!j.is_number_unsigned()) fail(path, "expected a nonnegative integer");
    return j.get<std::size_t>();
}

Rational need_rational(const Json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a rational string \"p\" or \"p/q\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const ParseError& e) {
        fail(path, e.what());
    }
}

Vector need_vector(const Json& j, const std::string& path, std::size_t dim) {
    if (!j.is_array() || j.size() != dim)
        fail(path, "expected an array of " + std::to_string(dim) + " rationals");
    Vector v(dim);
    for (std::size_t i = 0; i < dim; ++i)
        v[i] = need_rational(j[i], path + "[" + std::to_string(i) + "]");
    return v;
}

Matrix need_matrix(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of rows");
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& row = j[i];
        const std::string rp = path + "[" + std::to_string(i) + "]";
        if (!row.is_array()) fail(rp, "expected a row array");
        rows.push_back(need_vector(row, rp, row.size()));
        if (i > 0 && rows[i].size() != rows[0].size()) fail(rp, "ragged matrix rows");
    }
    return rows.empty() ? Matrix() : Matrix::from_rows(rows);
}

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

} // namespace

LieAlgebra algebra_from_json(const Json& j, const std::string& path) {
    const std::size_t dim = need_count(need(j, "dim", path), path + ".dim");
    const Json& basis = need(j, "basis", path);
    if (!basis.is_array() || basis.size() != dim)
        fail(path + ".basis", "expected " + std::to_string(dim) + " basis names");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < dim; ++i)
        names.push_back(need_string(basis[i], path + ".basis[" + std::to_string(i) + "]"));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = i + 1; k < dim; ++k)
            if (names[i] == names[k]) fail(path + ".basis", "duplicate name '" + names[i] + "'");

    LieAlgebra g(names);
    auto name_index = [&](const std::string& n, const std::string& p) -> std::size_t {
        for (std::size_t i = 0; i < dim; ++i)
            if (names[i] == n) return i;
        fail(p, "unknown basis name '" + n + "'");
    };

    if (j.contains("brackets")) {
        const Json& brackets = j["brackets"];
        const std::string bp = path + ".brackets";
        if (!brackets.is_array()) fail(bp, "expected an array of bracket entries");
        std::vector<std::vector<bool>> given(dim, std::vector<bool>(dim, false));
        for (std::size_t t = 0; t < brackets.size(); ++t) {
            const std::string ep = bp + "[" + std::to_string(t) + "]";
            const Json& entry = brackets[t];
            if (!entry.is_array() || entry.size() != 3)
                fail(ep, "expected [i_name, j_name, [[k_name, coeff], ...]]");
            const std::size_t i = name_index(need_string(entry[0], ep + "[0]"), ep + "[0]");
            const std::size_t jdx = name_index(need_string(entry[1], ep + "[1]"), ep + "[1]");
            const Json& terms = entry[2];
            if (!terms.is_array()) fail(ep + "[2]", "expected an array of [k_name, coeff] pairs");
            Vector value(dim);
            for (std::size_t s = 0; s < terms.size(); ++s) {
                const std::string tp = ep + "[2][" + std::to_string(s) + "]";
                const Json& term = terms[s];
                if (!term.is_array() || term.size() != 2) fail(tp, "expected [k_name, coeff]");
                const std::size_t k = name_index(need_string(term[0], tp + "[0]"), tp + "[0]");
                value[k] += need_rational(term[1], tp + "[1]");
            }
            if (given[i][jdx]) fail(ep, "duplicate bracket entry");
            given[i][jdx] = true;
            g.set_bracket_raw(i, jdx, value);
            if (!given[jdx][i]) {
                Vector neg(dim);
                for (std::size_t k = 0; k < dim; ++k) neg[k] = -value[k];
                g.set_bracket_raw(jdx, i, neg);
            }
        }
        // A later explicit (j,i) entry overrides the mirrored default, so run
        // a second pass for pairs where both directions were given explicitly.
        // (set_bracket_raw already stored them; nothing else to do.)
    }
    return g;
}

Workspace load_workspace(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError("document is not valid JSON at line " + std::to_string(line) +
                         ", column " + std::to_string(col));
    }
    if (!doc.is_object()) throw ParseError("at $: expected a top-level object");

    Workspace ws;
    if (doc.contains("algebras")) {
        const Json& algs = doc["algebras"];
        if (!algs.is_object()) throw ParseError("at algebras: expected an object");
        for (auto it = algs.begin(); it != algs.end(); ++it) {
            const std::string path = "algebras." + it.key();
            LieAlgebra g = algebra_from_json(it.value(), path);
            const auto report = g.validate();
            if (!report.ok) {
                std::string msg = "algebra '" + it.key() + "' fails validation";
                if (!report.jacobi_failures.empty()) {
                    const auto& f = report.jacobi_failures.front();
                    msg += "; Jacobi fails at (" + g.names()[f.i] + ", " + g.names()[f.j] +
                           ", " + g.names()[f.k] + ")";
                }
                if (!report.antisymmetry_failures.empty()) {
                    const auto& p = report.antisymmetry_failures.front();
                    msg += "; antisymmetry fails at (" + g.names()[p.first] + ", " +
                           g.names()[p.second] + ")";
                }
                throw ValidationError(msg);
            }
            ws.algebras.emplace(it.key(), std::move(g));
        }
    }

    auto algebra_of = [&](const Json& j, const std::string& path) -> const LieAlgebra& {
        const std::string name = need_string(need(j, "on", path), path + ".on");
        auto it = ws.algebras.find(name);
        if (it == ws.algebras.end()) fail(path + ".on", "unknown algebra '" + name + "'");
        return it->second;
    };
    auto on_name = [&](const Json& j, const std::string& path) {
        return need_string(need(j, "on", path), path + ".on");
    };

    if (doc.contains("forms")) {
        const Json& forms = doc["forms"];
        if (!forms.is_object()) throw ParseError("at forms: expected an object");
        for (auto it = forms.begin(); it != forms.end(); ++it) {
            const std::string path = "forms." + it.key();
            const LieAlgebra& g = algebra_of(it.value(), path);
            Matrix m = need_matrix(need(it.value(), "matrix", path), path + ".matrix");
            if (m.rows() != g.dim() || m.cols() != g.dim())
                fail(path + ".matrix", "expected a " + std::to_string(g.dim()) + "x" +
                                           std::to_string(g.dim()) + " matrix");
            try {
                ws.forms.emplace(it.key(), BilinearForm(std::move(m)));
            } catch (const ValidationError& e) {
                throw ValidationError("form '" + it.key() + "': " + e.what());
            }
            ws.form_on.emplace(it.key(), on_name(it.value(), path));
        }
    }

    if (doc.contains("representations")) {
        const Json& reps = doc["representations"];
        if (!reps.is_object()) throw ParseError("at representations: expected an object");
        for (auto it = reps.begin(); it != reps.end(); ++it) {
            const std::string path = "representations." + it.key();
            const LieAlgebra& g = algebra_of(it.value(), path);
            const std::size_t module_dim =
                need_count(need(it.value(), "module_dim", path), path + ".module_dim");
            const Json& ops = need(it.value(), "ops", path);
            if (!ops.is_object()) fail(path + ".ops", "expected matrices keyed by basis name");
            std::vector<Matrix> op_list;
            for (std::size_t i = 0; i < g.dim(); ++i) {
                const std::string key = g.names()[i];
                if (!ops.contains(key)) fail(path + ".ops", "missing operator for '" + key + "'");
                Matrix m = need_matrix(ops[key], path + ".ops." + key);
                if (m.rows() != module_dim || m.cols() != module_dim)
                    fail(path + ".ops." + key, "operator shape must be module_dim x module_dim");
                op_list.push_back(std::move(m));
            }
            Representation r(g, module_dim, std::move(op_list));
            const auto report = r.validate();
            if (!report.ok) {
                const auto& p = report.failures.front();
                throw ValidationError("representation '" + it.key() +
                                      "' is not a homomorphism at pair (" + g.names()[p.first] +
                                      ", " + g.names()[p.second] + ")");
            }
            ws.representations.emplace(it.key(), std::move(r));
            ws.representation_on.emplace(it.key(), on_name(it.value(), path));
        }
    }

    if (doc.contains("subspaces")) {
        const Json& subs = doc["subspaces"];
        if (!subs.is_object()) throw ParseError("at subspaces: expected an object");
        for (auto it = subs.begin(); it != subs.end(); ++it) {
            const std::string path = "subspaces." + it.key();
            const LieAlgebra& g = algebra_of(it.value(), path);
            Matrix rows = need_matrix(need(it.value(), "rows", path), path + ".rows");
            if (rows.rows() > 0 && rows.cols() != g.dim())
                fail(path + ".rows", "row length must equal the algebra dimension");
            ws.subspaces.emplace(it.key(), Subspace::span(g.dim(), rows));
            ws.subspace_on.emplace(it.key(), on_name(it.value(), path));
        }
    }

    if (doc.contains("cocycles")) {
        const Json& cocs = doc["cocycles"];
        if (!cocs.is_object()) throw ParseError("at cocycles: expected an object");
        for (auto it = cocs.begin(); it != cocs.end(); ++it) {
            const std::string path = "cocycles." + it.key();
            const LieAlgebra& g = algebra_of(it.value(), path);
            const std::size_t target =
                need_count(need(it.value(), "target_dim", path), path + ".target_dim");
            Cocycle2 theta(g.dim(), target);
            const Json& entries = need(it.value(), "entries", path);
            if (!entries.is_array()) fail(path + ".entries", "expected an array of entries");
            for (std::size_t t = 0; t < entries.size(); ++t) {
                const std::string ep = path + ".entries[" + std::to_string(t) + "]";
                const Json& entry = entries[t];
                if (!entry.is_array() || entry.size() != 3)
                    fail(ep, "expected [i_name, j_name, [values...]]");
                std::size_t i, jdx;
                try {
                    i = g.index_of_name(need_string(entry[0], ep + "[0]"));
                    jdx = g.index_of_name(need_string(entry[1], ep + "[1]"));
                } catch (const ValidationError& e) {
                    fail(ep, e.what());
                }
                theta.set(i, jdx, need_vector(entry[2], ep + "[2]", target));
            }
            ws.cocycles.emplace(it.key(), std::move(theta));
            ws.cocycle_on.emplace(it.key(), on_name(it.value(), path));
        }
    }

    if (doc.contains("matrices")) {
        const Json& mats = doc["matrices"];
        if (!mats.is_object()) throw ParseError("at matrices: expected an object");
        for (auto it = mats.begin(); it != mats.end(); ++it) {
            const std::string path = "matrices." + it.key();
            ws.matrices.emplace(it.key(),
                                need_matrix(need(it.value(), "rows", path), path + ".rows"));
        }
    }

    return ws;
}

Workspace load_workspace_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_workspace(buf.str());
}

Json algebra_to_json(const LieAlgebra& g) {
    Json j;
    j["dim"] = g.dim();
    j["basis"] = g.names();
    Json brackets = Json::array();
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t k = i + 1; k < g.dim(); ++k) {
            const Vector v = g.bracket_basis(i, k);
            if (cyclic::is_zero(v)) continue;
            Json terms = Json::array();
            for (std::size_t t = 0; t < v.size(); ++t)
                if (!v[t].is_zero()) terms.push_back(Json::array({g.names()[t], v[t].str()}));
            brackets.push_back(Json::array({g.names()[i], g.names()[k], terms}));
        }
    j["brackets"] = std::move(brackets);
    return j;
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json vector_to_json(const Vector& v) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(x.str());
    return row;
}

Json form_to_json(const BilinearForm& b, const std::string& on) {
    Json j;
    j["on"] = on;
    j["matrix"] = matrix_to_json(b.matrix());
    return j;
}

Json subspace_to_json(const Subspace& s, const std::string& on) {
    Json j;
    j["on"] = on;
    j["rows"] = matrix_to_json(s.basis());
    return j;
}

Json representation_to_json(const Representation& r, const std::string& on) {
    Json j;
    j["on"] = on;
    j["module_dim"] = r.module_dim();
    Json ops;
    for (std::size_t i = 0; i < r.algebra().dim(); ++i)
        ops[r.algebra().names()[i]] = matrix_to_json(r.op(i));
    j["ops"] = std::move(ops);
    return j;
}

Json cocycle_to_json(const Cocycle2& theta, const std::string& on,
                     const std::vector<std::string>& source_names) {
    Json j;
    j["on"] = on;
    j["target_dim"] = theta.target_dim();
    Json entries = Json::array();
    for (std::size_t i = 0; i < theta.source_dim(); ++i)
        for (std::size_t k = i + 1; k < theta.source_dim(); ++k) {
            const Vector v = theta(i, k);
            if (cyclic::is_zero(v)) continue;
            entries.push_back(Json::array({source_names[i], source_names[k], vector_to_json(v)}));
        }
    j["entries"] = std::move(entries);
    return j;
}

} // namespace cyclic::cli
