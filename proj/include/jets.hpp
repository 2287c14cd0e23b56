#ifndef JETS_HPP
#define JETS_HPP

#include <jets/graph.hpp>
#include <jets/jets.hpp>
#include <jets/matrix.hpp>
#include <jets/monomial_ideal.hpp>
#include <jets/parse.hpp>
#include <jets/poly.hpp>
#include <jets/rational.hpp>
#include <jets/ring.hpp>

#endif
