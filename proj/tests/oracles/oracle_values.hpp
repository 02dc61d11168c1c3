#pragma once
// Generated by tests/oracles/generate.py (mpmath, 40 digits). Do not edit by hand.
namespace oracle {
inline constexpr double kLnGamma7_25 = 7.0521854507385394449;
inline constexpr double kLnGamma0_013 = 4.3354402421510574653;
inline constexpr double kLnGamma143_7 = 568.59813841389100083;
inline constexpr double kRGammaM2_5 = -1.057855469152043038;
inline constexpr double kRGammaM0_3 = -0.23111495515996979965;
inline constexpr double kRGamma0_3 = 0.33427275256419055398;
inline constexpr double kJ1_3_17_2 = -0.052714501600453128956;
inline constexpr double kJ0_5 = -0.17759677131433830435;
inline constexpr double kJ0_5_3 = 0.065008182877375778114;
inline constexpr double kJ2_7_60 = 0.0055879261876983331244;
inline constexpr double kJm0_4_0_8 = 0.72309381138097314455;
inline constexpr double kJ10_5_30 = -0.063497369502545551616;
inline constexpr double kJ0_3_100 = -0.017225645932780617964;
inline constexpr double kJm0_75_12_5 = 0.21295332539492131489;
inline constexpr double kJ4_2_16_9 = -0.16173679170835213668;
inline constexpr double kJ0_8_1000 = 0.012151690294141553395;
inline constexpr double kF_0_3_0_7_1_1_0_4 = 1.1547968106874727155;
inline constexpr double kF_m2_3_1_5_0_3 = 0.099297366704405106503;
inline constexpr double kF_0_25_0_5_1_2_near1 = 1.4668439371718599357;
inline constexpr double kF_0_5_1_5_m1_0_3 = 0.35948083696873374927;
inline constexpr double kF_1_1_2_0_9 = 2.5584278811044952045;
inline constexpr double kF_0_4_0_6_1_0_99999 = 4.3776454583218315305;
inline constexpr double kF_0_3_0_2_0_5_m3 = 0.4733917815967258084;
inline constexpr double kJac3_0_4_m0_2_0_5 = -0.412125;
inline constexpr double kJac5_1_5_0_5_m0_7 = 0.5798925;
inline constexpr double kP_0_3_0_7_0_25 = 1.0411731665824577375;
inline constexpr double kP_1_2_m0_4_m0_6 = 0.098207008833489738365;
inline constexpr double kP_m0_7_1_5_0_9 = 0.70967490506712724232;
inline constexpr double kP_0_45_0_1_m0_999 = 1.6254269723865401751;
inline constexpr double kQ_0_3_0_7_1_5 = 0.98950860198628769381;
inline constexpr double kQ_1_2_m0_4_7 = 0.01831506070518882102;
inline constexpr double kQ_m0_7_1_5_1_0001 = 0.8326943715719138289;
inline constexpr double kQ_0_45_0_1_30 = 0.040946609650252750015;
inline constexpr double kK_0_3_0_6_int = 0.33931468274188278445;
inline constexpr double kK_0_3_1_4_ext = 0.057828475461616946461;
inline constexpr double kK_1_0_25_int = 0.094955059452195342039;
inline constexpr double kK_1_0_25_ext = 0.009596880034445815184;
inline constexpr double kK_m0_25_2_5_int = 1.3904226420665199739;
inline constexpr double kK_2_0_5_int = 0.067894039867291770955;
inline constexpr double kI_0_5_m1_0_999 = 7.6080103448452453089;
inline constexpr double kI_1_3_0_7_0_4 = 1.4096806741352310471;
inline constexpr double kJ_0_2_0_1_0_1_01 = 31.67445434403449082;
inline constexpr double kJ_m0_3_0_5_0_2_10 = 0.3011703584063960203;
inline constexpr double kHankelBump12_a05_x3 = -0.19954964810632785438;
inline constexpr double kHankelBump12_am03_x7_5 = 0.000097516385514045877283;
inline constexpr double kMean_half_0_bump12_t07_x12 = 0.53411682381983965086;
inline constexpr double kMean_mhalf_1_bump12_t16_x04 = 0.20166620235747500267;
}  // namespace oracle
