#include "gls/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gls {

namespace {

bool is_integer_literal(std::string_view s)
{
	std::size_t i = 0;
	if (!s.empty() && (s[0] == '-' || s[0] == '+'))
		i = 1;
	if (i == s.size())
		return false;
	for (; i < s.size(); ++i)
		if (!std::isdigit(static_cast<unsigned char>(s[i])))
			return false;
	return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text)
{
	const auto slash = text.find('/');
	std::string_view num = text.substr(0, slash);
	std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
	if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
		throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
	std::string n(num[0] == '+' ? num.substr(1) : num);
	mpz_class zn(n, 10), zd(std::string(den), 10);
	if (zd == 0)
		throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
	Scalar r(zn, zd);
	r.canonicalize();
	return r;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

bool is_zero(const Vector& v)
{
	for (const auto& x : v)
		if (!is_zero(x))
			return false;
	return true;
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i)
{
	Vector v(n);
	v[i] = 1;
	return v;
}

void axpy(const Scalar& a, const Vector& x, Vector& y)
{
	if (is_zero(a))
		return;
	for (std::size_t i = 0; i < x.size(); ++i)
		if (!is_zero(x[i]))
			y[i] += a * x[i];
}

Vector operator+(const Vector& a, const Vector& b)
{
	Vector r = a;
	axpy(1, b, r);
	return r;
}

Vector operator-(const Vector& a, const Vector& b)
{
	Vector r = a;
	axpy(-1, b, r);
	return r;
}

Vector operator*(const Scalar& a, const Vector& v)
{
	Vector r(v.size());
	if (is_zero(a))
		return r;
	for (std::size_t i = 0; i < v.size(); ++i)
		if (!is_zero(v[i]))
			r[i] = a * v[i];
	return r;
}

std::size_t nonzero_count(const Vector& v)
{
	std::size_t n = 0;
	for (const auto& x : v)
		n += !is_zero(x);
	return n;
}

}  // namespace gls
