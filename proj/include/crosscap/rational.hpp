#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace crosscap {

using Rational = mpq_class;

// Parses "p", "-p" or "p/q" into an exact rational.
inline Rational rational_from_string(const std::string& text) {
	mpq_class value;
	if (value.set_str(text, 10) != 0)
		throw std::invalid_argument("bad rational: '" + text + "'");
	if (value.get_den() == 0)
		throw std::invalid_argument("zero denominator: '" + text + "'");
	value.canonicalize();
	return value;
}

// Canonical form: "p" when the denominator is 1, else "p/q".
inline std::string rational_to_string(const Rational& value) {
	return value.get_str();
}

// mpq_class(p, q) stores p/q unreduced; reduce before storing or comparing.
inline Rational rational_canonical(const Rational& value) {
	Rational out = value;
	out.canonicalize();
	return out;
}

}  // namespace crosscap
