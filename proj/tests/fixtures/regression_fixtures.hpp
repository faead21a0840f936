#pragma once

// Reference values for the default run of the builtin "paper-f"
// (m = n = 10, selection grid 401, diagnostics grid 1001 per direction).
// Regenerated by the pin_fixtures tool; tests compare at 1e-10 relative.

namespace septensor::fixtures {

inline constexpr double kInterpSupError[10] = {
    0.999809960879354,
    0.5131574537059181,
    0.10351218863890788,
    0.010060122105343017,
    0.0009082788732486247,
    3.2943948430008696e-05,
    3.403607964358457e-07,
    6.692519871620561e-10,
    1.4486190025309043e-11,
    4.3520742565306136e-14,
};

inline constexpr double kSingularValues[10] = {
    21.427903361016078,
    2.3936427761628827,
    1.0207116933628173,
    0.17020023620681646,
    0.004682253049364212,
    0.0010956513421710118,
    1.7854752775808175e-05,
    1.256830506147622e-07,
    5.424212130322125e-10,
    4.1699926660114564e-12,
};

inline constexpr double kLebesgueX[10] = {
    1,
    1,
    1.4229701351112007,
    2.6119293565331003,
    3.10035537860712,
    4.233456881592746,
    2.444856453549069,
    2.5498518352570305,
    4.730543640961874,
    3.7441936110681833,
};

inline constexpr double kLebesgueY[10] = {
    1,
    1.8913294564966954,
    2.2810998551723753,
    4.165572707121548,
    2.1754353746074395,
    3.1219489738196677,
    4.965236931912146,
    2.318203729119478,
    3.354641781246124,
    3.6605724149051064,
};

}  // namespace septensor::fixtures
