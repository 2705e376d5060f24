#pragma once

#include <functional>

#include "lpfr/grid.hpp"

// Action of a diffeomorphism of the base space on densities and tangent
// fields by change of variables: values are resampled at the inverse image of
// each node and divided by the Jacobian there.

namespace lpfr {

struct DiffeoMap {
  std::function<double(double)> phi;   // strictly increasing, phi(0)=0, phi(1)=1
  std::function<double(double)> dphi;  // derivative, positive on [0,1]
};

DensityField pushforward(const DiffeoMap& map, const DensityField& mu);
TangentField pushforward(const DiffeoMap& map, const TangentField& a);

}  // namespace lpfr
