#pragma once

#include <json.hpp>

#include "gdiff/floquet.hpp"
#include "gdiff/gmodule.hpp"
#include "gdiff/group.hpp"
#include "gdiff/polymorph.hpp"
#include "gdiff/solver.hpp"

namespace gdiff {

using Json = nlohmann::json;

// {"kind":"free_abelian","rank":2}
// {"kind":"fin_gen_abelian","rank":1,"torsion":[2,3]}
// {"kind":"heisenberg_z"}
Json to_json(const GroupSpec& g);
GroupSpec group_from_json(const Json& j);

// list of {"k":[...],"nu":[...],"re":"p/q","im":"p/q"}; negative nu rejected
Json to_json(const FloquetElement& e);
FloquetElement floquet_from_json(const Json& j, int rank);

// {"arity":n,"rank":r,"values":{"1,2":<element>,...}}, nonzero entries only
Json to_json(const Polymorphism<FloquetElement>& L);

// object keyed by nu ("2" / "1,0"), each value a Floquet term list
Json to_json(const FloquetDecomposition& d);
FloquetDecomposition decomposition_from_json(const Json& j, int rank);

// {"rank":2,"period":1,"stencil":[{"offset":[1,0],"coeffs":["1"]},...]}
Json to_json(const StencilOperator& D);
StencilOperator stencil_from_json(const Json& j);

// {"nu":"2,0","coeffs":["1",...]} entries under "terms"
Json to_json(const PolyAnsatz& u);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace gdiff
