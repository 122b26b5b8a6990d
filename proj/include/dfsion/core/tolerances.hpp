#pragma once

namespace dfsion::tol {

// Checks on freshly constructed values (states, gate matrices).
inline constexpr double kConstruction = 1e-12;
// Checks on the output of composed gate pipelines.
inline constexpr double kPipeline = 1e-10;
// Probabilities below this are treated as exact zeros when enumerating outcomes.
inline constexpr double kZeroProbability = 1e-14;

}  // namespace dfsion::tol
