#pragma once

#include <polylie/fields/rational_function.hpp>
#include <polylie/symbolic/argument.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

namespace polylie::symbolic {

/// The rational function an argument denotes. Throws UndefinedSymbolError
/// for inf.
fields::RationalFunction to_rational_function(const Argument& a);

/// Factors numerator and denominator by trial division over `known`
/// polynomials and monomials; whatever is left becomes one compound atom.
Argument from_rational_function(const fields::RationalFunction& f,
                                const std::vector<fields::Polynomial>& known = {});

/// Atom polynomials occurring in the arguments.
std::vector<fields::Polynomial> atom_polynomials(const std::vector<Argument>& args);

/// Substitutes arguments for plain atoms, compound atoms included.
/// Throws SpecializationError at a pole.
Argument compose(const Argument& a, const std::map<Atom, Argument>& values);

/// 1 - a, factored over the atoms of a.
Argument one_minus(const Argument& a);

/// Plain variables, including those inside compound atoms.
std::set<std::string> variables(const Argument& a);

}  // namespace polylie::symbolic
