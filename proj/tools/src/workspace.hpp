#pragma once

#include "cyclic/constructions.hpp"
#include "cyclic/forms.hpp"
#include "cyclic/lie_algebra.hpp"
#include "cyclic/representation.hpp"
#include "cyclic/subspace.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace cyclic::cli {

using Json = nlohmann::ordered_json;

/// Name-keyed collections loaded from one structured input document.
/// Every cross-reference resolves and every object passes its validation
/// before a Workspace is handed out.
struct Workspace {
    std::map<std::string, LieAlgebra> algebras;
    std::map<std::string, BilinearForm> forms;
    std::map<std::string, std::string> form_on;
    std::map<std::string, Representation> representations;
    std::map<std::string, std::string> representation_on;
    std::map<std::string, Subspace> subspaces;
    std::map<std::string, std::string> subspace_on;
    std::map<std::string, Cocycle2> cocycles;
    std::map<std::string, std::string> cocycle_on;
    std::map<std::string, Matrix> matrices;
};

Workspace load_workspace(const std::string& text);
Workspace load_workspace_file(const std::string& path);

Json algebra_to_json(const LieAlgebra& g);
Json form_to_json(const BilinearForm& b, const std::string& on);
Json subspace_to_json(const Subspace& s, const std::string& on);
Json representation_to_json(const Representation& r, const std::string& on);
Json cocycle_to_json(const Cocycle2& theta, const std::string& on,
                     const std::vector<std::string>& source_names);
Json matrix_to_json(const Matrix& m);
Json vector_to_json(const Vector& v);

LieAlgebra algebra_from_json(const Json& j, const std::string& path);

} // namespace cyclic::cli
