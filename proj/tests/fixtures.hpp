#pragma once

#include <memory>
#include <string>

#include "superhopf/superhopf.hpp"

namespace fixtures {

using namespace superhopf;

inline const HopfStructureMaps& u_pl11()
{
    static const HopfStructureMaps h = enveloping(pl11());
    return h;
}

inline const BosonizedAlgebra& bar_u()
{
    static const BosonizedAlgebra b = bosonize(u_pl11());
    return b;
}

inline const BosonizedAlgebra& borel_smash()
{
    static const BosonizedAlgebra b = bosonize(enveloping(*borel_pl11()));
    return b;
}

inline LieAlgebraPtr pl11_ptr()
{
    static const LieAlgebraPtr g = std::make_shared<const LieSuperAlgebra>(pl11());
    return g;
}

inline Element el(const PresentationPtr& p, const std::string& text) { return parse_element(p, text); }
inline Element bu(const std::string& text) { return parse_element(bar_u().carrier(), text); }

} // namespace fixtures
