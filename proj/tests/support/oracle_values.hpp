#pragma once

// Generated by tests/oracles/generate_oracles.py. Do not edit.

#include <array>

namespace oracle {

inline constexpr std::array<std::array<double, 2>, 8> kE1{{
    {1e-08, 17.84346508905083},
    {0.01, 4.037929576538114},
    {0.5, 0.5597735947761608},
    {0.999, 0.21975218202294455},
    {1.0, 0.21938393439552029},
    {2.5, 0.024914917870269736},
    {10.0, 4.156968929685325e-06},
    {40.0, 1.036773261451657e-19},
}};

inline constexpr std::array<std::array<double, 3>, 6> kUpperGamma{{
    {0.0, 0.3, 0.9056766516758468},
    {0.0, 3.0, 0.013048381094197037},
    {1.0, 0.5, 0.6065306597126334},
    {2.0, 1.5, 0.5578254003710745},
    {4.0, 7.0, 0.4905924974683297},
    {6.0, 0.2, 119.99999101097463},
}};

inline constexpr std::array<std::array<double, 4>, 35> kIncompleteLogMoment{{
    {0.0, 0.0, 1e+300, 1.0},
    {0.0, 0.05, 1e+300, 0.951229424500714},
    {0.0, 0.7, 1e+300, 0.4965853037914095},
    {0.0, 1.0, 1e+300, 0.36787944117144233},
    {0.0, 3.0, 1e+300, 0.049787068367863944},
    {0.0, 0.2, 2.5, 0.7366457544540831},
    {0.0, 25.0, 1e+300, 1.3887943864964021e-11},
    {1.0, 0.0, 1e+300, 0.5772156649015329},
    {1.0, 0.05, 1e+300, 0.38173019802100405},
    {1.0, 0.7, 1e+300, -0.19664930784290977},
    {1.0, 1.0, 1e+300, -0.21938393439552029},
    {1.0, 3.0, 1e+300, -0.0677450662198917},
    {1.0, 0.2, 2.5, 0.19517441123078388},
    {1.0, 25.0, 1e+300, -4.523845673959335e-11},
    {2.0, 0.0, 1e+300, 1.978111990655945},
    {2.0, 0.05, 1e+300, 1.1451753800085676},
    {2.0, 0.7, 1e+300, 0.20106163784983538},
    {2.0, 1.0, 1e+300, 0.19568639443334035},
    {2.0, 3.0, 1e+300, 0.09451846356851362},
    {2.0, 0.2, 2.5, 0.3782421267214248},
    {2.0, 25.0, 1e+300, 1.4737849251037692e-10},
    {3.0, 0.0, 1e+300, 5.4448744564853175},
    {3.0, 0.05, 1e+300, 1.6119496029610532},
    {3.0, 0.7, 1e+300, -0.2121884467135645},
    {3.0, 1.0, 1e+300, -0.21362095157085012},
    {3.0, 3.0, 1e+300, -0.13556961953540886},
    {3.0, 0.2, 2.5, 0.3080539607917175},
    {3.0, 25.0, 1e+300, -4.801954908011156e-10},
    {4.0, 0.0, 1e+300, 23.561474084025605},
    {4.0, 0.05, 1e+300, 4.189902361933637},
    {4.0, 0.7, 1e+300, 0.266109149521064},
    {4.0, 1.0, 1e+300, 0.26570149070421073},
    {4.0, 3.0, 1e+300, 0.20036402387115607},
    {4.0, 0.2, 2.5, 0.46941964237201744},
    {4.0, 25.0, 1e+300, 1.5648072653150638e-09},
}};

inline constexpr std::array<std::array<double, 2>, 7> kLogMomentConstant{{
    {0.0, 1.0},
    {1.0, 0.5772156649015329},
    {2.0, 1.978111990655945},
    {3.0, 5.4448744564853175},
    {4.0, 23.561474084025605},
    {5.0, 117.83940826837743},
    {6.0, 715.0673625273189},
}};

inline constexpr std::array<std::array<double, 3>, 20> kGammaDeriv{{
    {0.0, 0.5, 1.772453850905516},
    {1.0, 0.5, -3.480230906913262},
    {2.0, 0.5, 15.580177442406253},
    {3.0, 0.5, -94.76860230921478},
    {4.0, 0.5, 765.0917957078601},
    {0.0, 1.0, 1.0},
    {1.0, 1.0, -0.5772156649015329},
    {2.0, 1.0, 1.978111990655945},
    {3.0, 1.0, -5.4448744564853175},
    {4.0, 1.0, 23.561474084025605},
    {0.0, 1.7, 0.9086387328532904},
    {1.0, 1.7, 0.1894946767642981},
    {2.0, 1.7, 0.7602807857968789},
    {3.0, 1.7, -0.0897170002236702},
    {4.0, 1.7, 2.255404245880701},
    {0.0, 3.2, 2.4239654799353683},
    {1.0, 3.2, 2.421150992495634},
    {2.0, 3.2, 3.306289693883525},
    {3.0, 3.2, 4.754385928907985},
    {4.0, 3.2, 7.648887038772791},
}};

inline constexpr std::array<std::array<double, 9>, 8> kMoments{{
    {-2.0, 1.0, -1.0, 2.8236806608528795, -1.0639586686908984, 6.144584554625881, -3.199352410226431, 82.63429989033045, 5.012576505943373},
    {-1.0, 2.0, -1.0, 8.91244796262378, 4.016963596219663, 34.152415653115085, 312.47978164704085, 3705.2726281825308, 18.016419119761075},
    {-1.0, 2.0, -2.0, 29.032066531282858, 3.9908625436812337, 37.50216035156098, 345.1256639658941, 4189.29349504625, 21.575176509003136},
    {-2.0, 2.0, -1.0, 7.603585303017649, 1.9511574065352968, 28.398837262639844, 206.42312133928584, 2714.6819121125536, 24.591822037562302},
    {1.0, 1.0, 2.0, 12.221310622229911, 3.5239827439014766, 15.865375571883087, 85.19532862834687, 535.1487966192998, 3.446921192567705},
    {0.5, 0.7, 0.3, 1.6036687464180799, 0.7305531468313685, 1.2452023179653877, 2.763287629802673, 8.460676315703516, 0.7114944176201727},
    {-2.0, 1.0, 1.0, 8.514818001246748, -2.0765302133691654, 5.559623541392052, -12.808143313948422, 48.097459740742956, 1.2476458143570603},
    {3.0, 1.5, -0.4, 8.075969671976187, 4.960131793085778, 30.347223469555054, 223.2133175637028, 1937.1417142255375, 5.744316064774725},
}};

inline constexpr std::array<std::array<double, 5>, 32> kCdf{{
    {-2.0, 1.0, -1.0, -3.5, 0.033048301457021464},
    {-2.0, 1.0, -1.0, -2.0, 0.4852578283952971},
    {-2.0, 1.0, -1.0, 0.0, 0.7233692030065912},
    {-2.0, 1.0, -1.0, 4.0, 0.9666761586570193},
    {-1.0, 2.0, -1.0, -4.0, 0.015859508585744666},
    {-1.0, 2.0, -1.0, -1.0, 0.12910314020684227},
    {-1.0, 2.0, -1.0, 3.0, 0.4041158751029103},
    {-1.0, 2.0, -1.0, 11.0, 0.9441562778127008},
    {-1.0, 2.0, -2.0, -4.0, 0.023955716537404373},
    {-1.0, 2.0, -2.0, -1.0, 0.1936414916376288},
    {-1.0, 2.0, -2.0, 3.0, 0.38283297751145295},
    {-1.0, 2.0, -2.0, 11.0, 0.9363732786976452},
    {-2.0, 2.0, -1.0, -5.0, 0.0301204624936647},
    {-2.0, 2.0, -1.0, -2.0, 0.3151197891746419},
    {-2.0, 2.0, -1.0, 2.0, 0.4869282606105312},
    {-2.0, 2.0, -1.0, 10.0, 0.9433353236638699},
    {1.0, 1.0, 2.0, -0.5, 0.006243123929088317},
    {1.0, 1.0, 2.0, 1.0, 0.0524468072457202},
    {1.0, 1.0, 2.0, 3.0, 0.4293949355062098},
    {1.0, 1.0, 2.0, 7.0, 0.9534006442765648},
    {0.5, 0.7, 0.3, -0.5499999999999998, 0.017296460753851165},
    {0.5, 0.7, 0.3, 0.5, 0.44935849351749646},
    {0.5, 0.7, 0.3, 1.9, 0.9138969147321848},
    {0.5, 0.7, 0.3, 4.699999999999999, 0.9977944448624778},
    {-2.0, 1.0, 1.0, -3.5, 0.030557824639004128},
    {-2.0, 1.0, 1.0, -2.0, 0.6096177759478647},
    {-2.0, 1.0, 1.0, 0.0, 0.969752214986436},
    {-2.0, 1.0, 1.0, 4.0, 0.9947648796784807},
    {3.0, 1.5, -0.4, 0.75, 0.0033902239148828955},
    {3.0, 1.5, -0.4, 3.0, 0.20303313635795522},
    {3.0, 1.5, -0.4, 6.0, 0.7251517394987995},
    {3.0, 1.5, -0.4, 12.0, 0.9870253073416028},
}};

inline constexpr std::array<std::array<double, 5>, 15> kMgf{{
    {-2.0, 1.0, -1.0, -0.2, 1.3450850893735755},
    {-2.0, 1.0, -1.0, -0.7, 4.246015463476438},
    {-2.0, 1.0, -1.0, -1.5, 41.52191959729777},
    {-1.0, 2.0, -1.0, -0.2, 0.6221391353050446},
    {-1.0, 2.0, -1.0, -0.7, 1.3375787226817848},
    {-1.0, 2.0, -1.0, -1.5, 25.484659214923596},
    {-1.0, 2.0, -2.0, -0.2, 0.6709661911229418},
    {-1.0, 2.0, -2.0, -0.7, 1.920187438264494},
    {-1.0, 2.0, -2.0, -1.5, 38.74887479913716},
    {-2.0, 2.0, -1.0, -0.2, 1.0220244723528409},
    {-2.0, 2.0, -1.0, -0.7, 5.549840656667334},
    {-2.0, 2.0, -1.0, -1.5, 229.35989683096014},
    {1.0, 1.0, 2.0, -0.2, 0.526516163500034},
    {1.0, 1.0, 2.0, -0.7, 0.16661136589498612},
    {1.0, 1.0, 2.0, -1.5, 0.07588188572433316},
}};

inline constexpr std::array<double, 3> kRoots112{-0.08961382448447257, 0.38979205515789783, 2.7911689564495625};
inline constexpr std::array<double, 2> kD112{0.13217840321889587, 0.9373492677588294};

inline constexpr double kLoglikFixture = -222.88885888971114;  // (-2, 1, -1) on data/loglik_fixture.csv

// mean, median, max, min, sd of data/bimodal_maxima.csv
inline constexpr std::array<double, 5> kBimodalStats{1009.5995777241379, 1006.853989, 1017.323266, 1003.994586, 4.596627431813568};
inline constexpr double kBimodalLjungBoxQ5 = 3.7254279271374484;
inline constexpr double kBimodalLjungBoxP5 = 0.5895844974815279;
inline constexpr double kBimodalKsStat = 0.3245459821430513;  // centered vs Gumbel(-1, 3.5)
inline constexpr double kBimodalKsP = 0.004444898197941727;

inline constexpr double kSeriesLjungBoxQ10 = 7466.528108515263;
inline constexpr double kSeriesLjungBoxP10 = 0.0;
inline constexpr double kSeriesLastBlockMax = 1009.2532;
inline constexpr double kSeriesFirstBlockMax = 1013.8474;

inline constexpr std::array<std::array<double, 2>, 9> kKolmogorov{{
    {0.2, 0.999999999999495},
    {0.5, 0.9639452436648751},
    {0.8, 0.5441424115741981},
    {1.0, 0.26999967167735456},
    {1.17, 0.12939004218561884},
    {1.19, 0.11774229287977166},
    {1.36, 0.049485876755377876},
    {1.63, 0.009846364888486529},
    {2.5, 7.453306344157342e-06},
}};

inline constexpr std::array<std::array<double, 3>, 4> kChiSquareSurvival{{
    {1.0, 0.5, 0.47950012218695337},
    {5.0, 3.2, 0.6691829020332432},
    {10.0, 18.3, 0.050109061411462506},
    {10.0, 40.0, 1.694474393006737e-05},
}};

}  // namespace oracle
