#pragma once

#include <string>

#include "geocrystal/parser.hpp"
#include "geocrystal/rational_function.hpp"

inline geocrystal::RationalFunction rf(const std::string& text) { return geocrystal::parse_rf(text); }

inline geocrystal::EvalPoint all_ones(int count = 6) {
  geocrystal::EvalPoint p;
  for (int k = 0; k < count; ++k) p.set(geocrystal::vars::x(k), geocrystal::Rational(1));
  return p;
}
