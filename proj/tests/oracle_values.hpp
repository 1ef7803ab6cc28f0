#pragma once

// mpmath reference values, 60-digit working precision.
// Regenerate with tests/oracles/generate_specfun_oracles.py.

#include <complex>

namespace oracle {

using C = std::complex<double>;

struct GammaPoint { C z, value; };
struct HypPoint { C a, b, c; double z; C value; };

inline const GammaPoint kGamma[] = {
    {{2.0, 3.0}, {-8.2395272665611883674e-2, 9.1774287435259314596e-2}},
    {{2.999999999999999889e-1, -1.6999999999999999556}, {7.1091832537680393668e-2, 1.3937742326232289687e-1}},
    {{-2.5, 4.000000000000000222e-1}, {-4.6185613415508463432e-1, -2.1879479797506848006e-1}},
    {{5.5, 0.0}, {5.2342777784553520181e+1, 0.0}},
    {{-6.9999999999999995559e-1, -2.2000000000000001776}, {-2.5821699660323847557e-2, 1.3876967566537476611e-2}},
    {{1.0000000000000000208e-2, 2.0000000000000000416e-2}, {1.9432936412460990423e+1, -3.9980583603316279436e+1}},
};

inline const HypPoint kHyp[] = {
    {{2.999999999999999889e-1, 6.9999999999999995559e-1}, {1.1000000000000000888, -2.000000000000000111e-1}, {9.000000000000000222e-1, 4.000000000000000222e-1}, -0.5999999999999999778, {6.8739394494158482173e-1, -1.6884730150139021935e-1}},
    {{5.0e-1, 1.1999999999999999556}, {-2.999999999999999889e-1, 8.0000000000000004441e-1}, {1.6999999999999999556, -5.0e-1}, -0.94999999999999995559, {1.5954523036488682962, -2.1153036575452912192e-2}},
    {{1.25, -5.999999999999999778e-1}, {7.5e-1, 5.999999999999999778e-1}, {2.1000000000000000888, 2.999999999999999889e-1}, -0.13533528323661270232, {9.2255354474818894827e-1, -6.791039881346350648e-3}},
    {{2.000000000000000111e-1, 9.000000000000000222e-1}, {4.000000000000000222e-1, -9.000000000000000222e-1}, {1.0, 1.8000000000000000444}, 0.75, {1.1472120342628602936, -4.2695433633898420231e-1}},
    {{-5.0e-1, 1.1000000000000000888}, {1.5, 1.1000000000000000888}, {1.0, 2.5}, 0.97999999999999998224, {-4.1993718128526056001e-2, 2.0825777210885981658}},
    {{5.0e-1, -4.000000000000000222e-1}, {5.0e-1, 4.000000000000000222e-1}, {1.3000000000000000444, 0.0}, 0.5999999999999999778, {1.2909891972777970436, -5.8677189821447582256e-70}},
    {{1.5, 2.000000000000000111e-1}, {-5.0e-1, 6.9999999999999995559e-1}, {4.000000000000000222e-1, -1.1000000000000000888}, 0.99899999999999999911, {1.6069642885984001073, -4.1574915242910654179}},
    {{1.0000000000000000555e-1, 2.0}, {9.000000000000000222e-1, -2.0}, {1.0, 4.000000000000000222e-1}, -3.0, {-1.8247228568497139146e-2, 1.1310968148852800506e-1}},
    {{8.0000000000000004441e-1, 2.999999999999999889e-1}, {5.999999999999999778e-1, -1.3999999999999999112}, {2.6000000000000000888, 9.000000000000000222e-1}, -400.0, {2.2159248257767994941e-2, 4.9617238708335897224e-3}},
};

// z given through its complement w = 1 - z
inline const HypPoint kHypNearOne[] = {
    {{5.0e-1, 1.0}, {5.0e-1, -2.999999999999999889e-1}, {1.0200000000000000178, 0.0}, 6.914400106940203e-13, {7.9045910074965116211e-1, 8.2091758342577830211e-1}},
    {{2.5e-1, -1.5}, {1.25, 5.0e-1}, {1.0, -2.0}, 1.0e-9, {1.3720660334568910306e+4, -5.8038672555114584704e+3}},
};

inline const HypPoint kHypRegularized[] = {
    {{5.0e-1, 0.0}, {1.5, 0.0}, {-1.0, 0.0}, 0.2999999999999999889, {3.5948083696873370592e-1, 0.0}},
    {{2.999999999999999889e-1, 2.000000000000000111e-1}, {1.1000000000000000888, -5.0e-1}, {-2.0, 0.0}, -0.4000000000000000222, {-3.0294331231642675478e-2, -2.2211550318015974071e-3}},
    {{2.999999999999999889e-1, 2.000000000000000111e-1}, {1.1000000000000000888, -5.0e-1}, {-2.0, 0.0}, 0.80000000000000004441, {1.6927712568460927578e+2, -6.9356377172656137991e+1}},
    {{1.5, 2.000000000000000111e-1}, {5.0e-1, 1.1999999999999999556}, {0.0, 0.0}, 0.5999999999999999778, {-6.1067656202171990072, 2.2390460549834113089}},
};

// (-exp(-4))^(0.25 + 0.1i)
inline const C kPowerNegE4 = {2.4899066335873975312e-1, 1.0101193727153747154e-1};

// Scattering h-table entries (1-based index) at E=2.5, a=2, L=2, V0=5
struct HEntry { int index; C value; };
inline const HEntry kHTable[] = {
    {1, {1.0091688548317905906, 3.0222285050034169526e-3}},
    {3, {1.0054505698925085271, 8.6602903706942249377e-2}},
    {5, {1.3119029578518240963, -2.1875889202138061517e-1}},
    {6, {1.8068846172855284577e+2, -1.6388404765157756691e+2}},
    {7, {2.3815488048707553665e+2, 4.3099638968870083363e+2}},
};

}  // namespace oracle
