#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "pathalg/errors.hpp"

namespace pathalg {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number, always reduced with positive denominator.
class Rat {
public:
	Rat() : v_(0) {}
	Rat(long long n) : v_(n) {}
	Rat(const BigInt& n) : v_(n) {}
	Rat(const BigInt& num, const BigInt& den) {
		if (den == 0)
			throw domain_error("rational with zero denominator");
		v_ = boost::multiprecision::cpp_rational(num);
		v_ /= boost::multiprecision::cpp_rational(den);
	}
	Rat(long long num, long long den) : Rat(BigInt(num), BigInt(den)) {}

	static Rat parse(const std::string& s) {
		auto slash = s.find('/');
		if (slash == std::string::npos)
			return Rat(parse_int(s));
		return Rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
	}

	BigInt num() const { return numerator(v_); }
	BigInt den() const { return denominator(v_); }

	bool is_zero() const { return v_ == 0; }
	bool is_integer() const { return denominator(v_) == 1; }
	int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }
	Rat abs() const { return v_ < 0 ? Rat(-*this) : *this; }

	Rat operator-() const {
		Rat r;
		r.v_ = -v_;
		return r;
	}
	Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
	Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
	Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
	Rat& operator/=(const Rat& o) {
		if (o.is_zero())
			throw domain_error("division by zero rational");
		v_ /= o.v_;
		return *this;
	}
	friend Rat operator+(Rat a, const Rat& b) { return a += b; }
	friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
	friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
	friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

	friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
	friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
	friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
	friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
	friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
	friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

	// "p" when the value is an integer, otherwise "p/q" with q > 0.
	std::string str() const {
		std::string s = num().str();
		if (!is_integer())
			s += "/" + den().str();
		return s;
	}

	Rat scaled(const Rat& k) const { return *this * k; }

	Rat pow(unsigned k) const {
		Rat r(1), base = *this;
		while (k) {
			if (k & 1)
				r *= base;
			base *= base;
			k >>= 1;
		}
		return r;
	}

private:
	boost::multiprecision::cpp_rational v_;

	static BigInt parse_int(const std::string& s) {
		std::size_t i = 0;
		if (i < s.size() && (s[i] == '-' || s[i] == '+'))
			++i;
		if (i == s.size())
			throw domain_error("bad rational literal: '" + s + "'");
		for (; i < s.size(); ++i)
			if (s[i] < '0' || s[i] > '9')
				throw domain_error("bad rational literal: '" + s + "'");
		return BigInt(s);
	}
};

}
