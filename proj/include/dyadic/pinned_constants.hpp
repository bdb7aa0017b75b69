#pragma once

// Generated by pin_constants --seed 1000.
namespace dyadic::pinned {

// observed [0.7295529041638189, 1.6414940343685929] over 200
inline constexpr double kLmoRatioLower = 0.656;
// observed [0.7295529041638189, 1.6414940343685929] over 200
inline constexpr double kLmoRatioUpper = 1.81;
// observed [0, 1.109375] over 676
inline constexpr double kExtremalBound = 1.23;
// observed [0, 0.2618646405934671] over 1276
inline constexpr double kGrowthUpper = 0.289;
// observed [0.25, 0.2544014084507043] over 484
inline constexpr double kGrowthSharpness = 0.225;
// observed [0.49911851488511527, 0.7295529041638193] over 50
inline constexpr double kNecessityBound = 0.803;
// observed [0, 0.2492986173994401] over 300
inline constexpr double kSufficiencyBound = 0.275;
// observed [0.0683957850903479, 0.38729165406792276] over 50
inline constexpr double kDeltaLower = 0.0615;
// observed [0.0683957850903479, 0.38729165406792276] over 50
inline constexpr double kDeltaUpper = 0.427;
// observed [1.9452746819885396e-18, 1.5595887248942681] over 200
inline constexpr double kCommutatorBound = 1.72;

}  // namespace dyadic::pinned
