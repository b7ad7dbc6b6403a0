// Deuteranomaly simulation matrices from Machado, Oliveira & Fernandes,
// "A Physiologically-based Model for Simulation of Color Vision Deficiency"
// (IEEE TVCG 15(6), 2009), supplementary table, severity 0.0 to 1.0 in 0.1
// steps. Data only; every row sums to 1 (validated by the unit tests).

#include "puviz/cvd.hpp"

namespace puviz {

const std::array<CvdMatrix, 11> kDeuteranomalyMatrices = {{
    // 0.0
    {{{1.000000, 0.000000, -0.000000},
      {0.000000, 1.000000, 0.000000},
      {-0.000000, -0.000000, 1.000000}}},
    // 0.1
    {{{0.866435, 0.177704, -0.044139},
      {0.049567, 0.939063, 0.011370},
      {-0.003453, 0.007233, 0.996220}}},
    // 0.2
    {{{0.760729, 0.319078, -0.079807},
      {0.090568, 0.889315, 0.020117},
      {-0.006027, 0.013325, 0.992702}}},
    // 0.3
    {{{0.675425, 0.433850, -0.109275},
      {0.125303, 0.847755, 0.026942},
      {-0.007950, 0.018572, 0.989378}}},
    // 0.4
    {{{0.605511, 0.528560, -0.134071},
      {0.155318, 0.812366, 0.032316},
      {-0.009376, 0.023176, 0.986200}}},
    // 0.5
    {{{0.547494, 0.607765, -0.155259},
      {0.181692, 0.781742, 0.036566},
      {-0.010410, 0.027275, 0.983136}}},
    // 0.6
    {{{0.498864, 0.674741, -0.173604},
      {0.205199, 0.754872, 0.039929},
      {-0.011131, 0.030969, 0.980162}}},
    // 0.7
    {{{0.457771, 0.731899, -0.189670},
      {0.226409, 0.731012, 0.042579},
      {-0.011595, 0.034333, 0.977261}}},
    // 0.8
    {{{0.422823, 0.781057, -0.203881},
      {0.245752, 0.709602, 0.044646},
      {-0.011843, 0.037423, 0.974421}}},
    // 0.9
    {{{0.392952, 0.823610, -0.216562},
      {0.263559, 0.690210, 0.046232},
      {-0.011910, 0.040281, 0.971630}}},
    // 1.0
    {{{0.367322, 0.860646, -0.227968},
      {0.280085, 0.672501, 0.047413},
      {-0.011820, 0.042940, 0.968881}}},
}};

} // namespace puviz
