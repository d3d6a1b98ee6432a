#include "refs.hpp"

#include "cyclic/errors.hpp"
#include "cyclic/forms.hpp"

#include <sstream>

namespace cyclic::cli {

namespace {

struct FileRef {
    std::string path;
    std::string name; // empty means "the only entry"
};

FileRef split_file_ref(const std::string& ref) {
    const auto hash = ref.find('#');
    if (hash == std::string::npos) return {ref, ""};
    return {ref.substr(0, hash), ref.substr(hash + 1)};
}

template <typename MapT>
typename MapT::const_iterator pick(const MapT& map, const FileRef& fr, const char* kind) {
    if (!fr.name.empty()) {
        auto it = map.find(fr.name);
        if (it == map.end())
            throw ParseError("no " + std::string(kind) + " named '" + fr.name + "' in '" +
                             fr.path + "'");
        return it;
    }
    if (map.size() == 1) return map.begin();
    throw ParseError("'" + fr.path + "' holds " + std::to_string(map.size()) + " " + kind +
                     "(s); use '" + fr.path + "#<name>'");
}

bool has_prefix(const std::string& s, const std::string& prefix, std::string& rest) {
    if (s.rfind(prefix, 0) != 0) return false;
    rest = s.substr(prefix.size());
    return true;
}

} // namespace

AlgebraRef resolve_algebra(const std::string& ref) {
    std::string rest;
    if (has_prefix(ref, "catalog:", rest)) {
        auto entry = make_by_id(rest);
        return {ref, std::move(entry.algebra)};
    }
    const auto fr = split_file_ref(ref);
    const Workspace ws = load_workspace_file(fr.path);
    auto it = pick(ws.algebras, fr, "algebra");
    return {ref, it->second};
}

FormRef resolve_form(const std::string& ref) {
    std::string rest;
    if (has_prefix(ref, "zero:", rest)) {
        auto alg = resolve_algebra(rest);
        BilinearForm z = BilinearForm::zero(alg.algebra.dim());
        return {ref, std::move(alg.algebra), std::move(z)};
    }
    if (has_prefix(ref, "killing:", rest)) {
        auto alg = resolve_algebra(rest);
        BilinearForm k = killing_form(alg.algebra);
        return {ref, std::move(alg.algebra), std::move(k)};
    }
    if (has_prefix(ref, "catalog:", rest)) {
        auto entry = make_by_id(rest);
        if (!entry.distinguished_form)
            throw ParseError("catalog entry '" + rest + "' carries no distinguished form");
        return {ref, std::move(entry.algebra), std::move(*entry.distinguished_form)};
    }
    const auto fr = split_file_ref(ref);
    const Workspace ws = load_workspace_file(fr.path);
    auto it = pick(ws.forms, fr, "form");
    const auto& on = ws.form_on.at(it->first);
    return {ref, ws.algebras.at(on), it->second};
}

RepRef resolve_rep(const std::string& ref) {
    std::string rest;
    if (has_prefix(ref, "vk:", rest)) {
        std::size_t k = 0;
        try {
            k = static_cast<std::size_t>(std::stoul(rest));
        } catch (...) {
            throw ParseError("vk:<k> needs a nonnegative integer, got '" + rest + "'");
        }
        return {ref, vk_module(k)};
    }
    if (has_prefix(ref, "adjoint:", rest)) {
        auto alg = resolve_algebra(rest);
        return {ref, adjoint_rep(alg.algebra)};
    }
    if (has_prefix(ref, "natural:", rest)) {
        auto entry = make_by_id(rest);
        if (!entry.natural_rep)
            throw ParseError("catalog entry '" + rest + "' carries no natural representation");
        return {ref, std::move(*entry.natural_rep)};
    }
    const auto fr = split_file_ref(ref);
    const Workspace ws = load_workspace_file(fr.path);
    auto it = pick(ws.representations, fr, "representation");
    return {ref, it->second};
}

SubspaceRef resolve_subspace(const std::string& ref, const LieAlgebra& context) {
    std::string rest;
    if (has_prefix(ref, "span:", rest)) {
        std::vector<Vector> rows;
        std::stringstream ss(rest);
        std::string name;
        while (std::getline(ss, name, ',')) {
            Vector row(context.dim());
            row[context.index_of_name(name)] = Rational(1);
            rows.push_back(std::move(row));
        }
        return {ref, Subspace::span(context.dim(), rows)};
    }
    const auto fr = split_file_ref(ref);
    const Workspace ws = load_workspace_file(fr.path);
    auto it = pick(ws.subspaces, fr, "subspace");
    if (it->second.ambient_dim() != context.dim())
        throw ValidationError("subspace '" + ref + "' lives in dimension " +
                              std::to_string(it->second.ambient_dim()) +
                              ", expected " + std::to_string(context.dim()));
    return {ref, it->second};
}

CocycleRef resolve_cocycle(const std::string& ref) {
    const auto fr = split_file_ref(ref);
    const Workspace ws = load_workspace_file(fr.path);
    auto it = pick(ws.cocycles, fr, "cocycle");
    return {ref, it->second};
}

Matrix resolve_matrix(const std::string& ref) {
    const auto fr = split_file_ref(ref);
    const Workspace ws = load_workspace_file(fr.path);
    auto it = pick(ws.matrices, fr, "matrix");
    return it->second;
}

Vector resolve_vector(const std::string& text, const LieAlgebra& context) {
    if (text.find(',') == std::string::npos) {
        // Try a single basis name first, then a single rational (dim 1).
        for (std::size_t i = 0; i < context.dim(); ++i)
            if (context.names()[i] == text) {
                Vector v(context.dim());
                v[i] = Rational(1);
                return v;
            }
    }
    std::vector<Rational> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) entries.push_back(Rational::parse(item));
    if (entries.size() != context.dim())
        throw ParseError("vector '" + text + "' has " + std::to_string(entries.size()) +
                         " entries, expected " + std::to_string(context.dim()));
    return entries;
}

} // namespace cyclic::cli
