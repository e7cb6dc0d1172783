/*
   Copyright 2026 The pershlab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Generated by tests/oracles/oracle_values.py (mpmath, 40 digits). Do not edit.

#pragma once

namespace pershlab::test::oracle {

inline constexpr double kSincCovHalf = 0.63661977236758134308;
inline constexpr double kBesselJ0At2p5 = -0.048383776468197996327;
inline constexpr double kBesselJ0At7p3 = 0.28821694763501439904;
inline constexpr double kLogOscIntegral = -0.070609092357390306695;
inline constexpr double kLogOscIntegralClosed = -0.070609092357390306695;
inline constexpr double kLogSquaredIntegral = 1.8393972058572116080;
inline constexpr double kLogMomentBoxPi = 4.6789165423300502734;
inline constexpr double kCounterexampleLogMassTo0p1 = 0.25878181528521938661;
inline constexpr double kCounterexampleRecipCov1 = 3.1482599378538620872;
inline constexpr double kCounterexampleRecipCov3 = -0.13722232251651212144;
inline constexpr double kCounterexampleLogCov2 = 1.8514603464585501327;
inline constexpr double kNormalAbsWithin1 = 0.68268949213708589717;
inline constexpr double kIidBall5 = 0.14829144308886250314;
inline constexpr double kIidBallExponent = 0.38171514630212607227;
inline constexpr double kNormalTail2 = 0.022750131948179207200;
inline constexpr double kNormalTail2p5 = 0.0062096653257761351670;
inline constexpr double kNormalTail3 = 0.0013498980316300945267;
inline constexpr double kNormalTail4 = 0.000031671241833119921254;
inline constexpr double kNormalAbsWithin0p1 = 0.079655674554057962931;
inline constexpr double kNormalAbsWithin0p5 = 0.38292492254802620728;
inline constexpr double kBivariateBox0p5 = 0.49797177783920798968;
inline constexpr double kCosinePersistL0p3T1 = 0.23056843242657943397;
inline constexpr double kCosinePersistLm0p5T2 = 0.41055497265278282923;
inline constexpr double kCosinePersistL0p5T0p5 = 0.23849778535406026199;
inline constexpr double kCosinePersistLm1TPi = 0.53807941621222623678;
inline constexpr double kCosinePersistL0TPiHalf = 0.25000000000000000000;
inline constexpr double kNonconvPeakMass1 = 0.00029721360591784973365;
inline constexpr double kNonconvPeakMass2 = 2.7751388712486853492e-7;
inline constexpr double kTvBesselSinc = 0.68169011381620932846;

} // namespace pershlab::test::oracle
