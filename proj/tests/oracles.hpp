#pragma once

// Frozen output of tools/oracles.py (mpmath at 30 digits plus scipy quadrature).

namespace oracle {

inline constexpr double kSingleBoundE = -0.4071014836413113;
inline constexpr double kSingleBoundN = 1.583323551193348;
inline constexpr double kSingleResRe = 12.71311617262105;
inline constexpr double kSingleResIm = -12.942216967993023;
inline constexpr double kSingleResNRe = 0.21484950632441355;
inline constexpr double kSingleResNIm = -0.6107451665494881;
inline constexpr double kSingleGammaR = 25.884433935986046;
inline constexpr double kSingleGamma = 0.15762944302830378;

inline constexpr double kTwoBoundE = -0.48619301961951256;
inline constexpr double kTwoBoundN[2] = {1.6957810766650767, 0.9540876903354382};
inline constexpr double kTwoResRe = 3.6630337723852007;
inline constexpr double kTwoResIm = -0.058146725043317256;
inline constexpr double kTwoResN[2][2] = {{0.09194456440100388, 0.14664874203712977},
                                          {1.4600830373980418, 0.10815363492160741}};
inline constexpr double kTwoGammaR = 0.11629345008663451;
inline constexpr double kTwoGammaHalf[2] = {0.9749030319668451, 0.9972219435522436};
inline constexpr double kTwoGammaQuarter[2] = {1.9608662627161808, 1.0017199963334074};

inline constexpr double kDecoupledE[2] = {-0.4071014836413113, 3.5928985163586886};
inline constexpr double kK2AtBoundGuess = 2.1180635023530336;

}  // namespace oracle
