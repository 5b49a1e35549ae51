#include "pathalg/matpoly.hpp"

#include "pathalg/errors.hpp"

namespace pathalg {

RatMat RatMat::identity(int N) {
	RatMat m(N);
	for (int i = 0; i < N; ++i)
		m.at(i, i) = Rat(1);
	return m;
}

bool RatMat::is_zero() const {
	for (const auto& v : a_)
		if (!v.is_zero())
			return false;
	return true;
}

RatMat RatMat::operator-() const {
	RatMat r(N_);
	for (std::size_t k = 0; k < a_.size(); ++k)
		r.a_[k] = -a_[k];
	return r;
}

RatMat& RatMat::operator+=(const RatMat& o) {
	if (N_ != o.N_)
		throw dimension_error("matrix add: size mismatch");
	for (std::size_t k = 0; k < a_.size(); ++k)
		a_[k] += o.a_[k];
	return *this;
}

RatMat& RatMat::operator-=(const RatMat& o) {
	if (N_ != o.N_)
		throw dimension_error("matrix sub: size mismatch");
	for (std::size_t k = 0; k < a_.size(); ++k)
		a_[k] -= o.a_[k];
	return *this;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
	if (a.N_ != b.N_)
		throw dimension_error("matrix mul: size mismatch");
	RatMat r(a.N_);
	for (int i = 0; i < a.N_; ++i)
		for (int k = 0; k < a.N_; ++k) {
			const Rat& v = a.at(i, k);
			if (v.is_zero())
				continue;
			for (int j = 0; j < a.N_; ++j)
				r.at(i, j) += v * b.at(k, j);
		}
	return r;
}

RatMat RatMat::scaled(const Rat& c) const {
	RatMat r(N_);
	for (std::size_t k = 0; k < a_.size(); ++k)
		r.a_[k] = a_[k] * c;
	return r;
}

RatMat RatMat::inverse() const {
	std::vector<std::vector<Rat>> M((std::size_t)N_, std::vector<Rat>((std::size_t)N_));
	std::vector<std::vector<Rat>> cols((std::size_t)N_, std::vector<Rat>((std::size_t)N_, Rat(0)));
	for (int i = 0; i < N_; ++i) {
		cols[(std::size_t)i][(std::size_t)i] = Rat(1);
		for (int j = 0; j < N_; ++j)
			M[(std::size_t)i][(std::size_t)j] = at(i, j);
	}
	auto sol = solve_linear(M, cols);
	RatMat r(N_);
	for (int j = 0; j < N_; ++j)
		for (int i = 0; i < N_; ++i)
			r.at(i, j) = sol[(std::size_t)j][(std::size_t)i];
	return r;
}

MatPoly MatPoly::identity(int N, int nvars, int cap) {
	MatPoly m(N, nvars, cap);
	for (int i = 0; i < N; ++i)
		m.at(i, i) = MPoly::constant(nvars, cap, Rat(1));
	return m;
}

MatPoly MatPoly::from_const(const RatMat& c, int nvars, int cap) {
	MatPoly m(c.N(), nvars, cap);
	for (int i = 0; i < c.N(); ++i)
		for (int j = 0; j < c.N(); ++j)
			m.at(i, j) = MPoly::constant(nvars, cap, c.at(i, j));
	return m;
}

bool MatPoly::is_zero() const {
	for (const auto& p : e_)
		if (!p.is_zero())
			return false;
	return true;
}

MatPoly MatPoly::operator-() const {
	MatPoly r = *this;
	for (auto& p : r.e_)
		p = -p;
	return r;
}

MatPoly& MatPoly::operator+=(const MatPoly& o) {
	if (N_ != o.N_)
		throw dimension_error("matpoly add: size mismatch");
	for (std::size_t k = 0; k < e_.size(); ++k)
		e_[k] += o.e_[k];
	return *this;
}

MatPoly& MatPoly::operator-=(const MatPoly& o) {
	if (N_ != o.N_)
		throw dimension_error("matpoly sub: size mismatch");
	for (std::size_t k = 0; k < e_.size(); ++k)
		e_[k] -= o.e_[k];
	return *this;
}

MatPoly operator*(const MatPoly& a, const MatPoly& b) {
	if (a.N_ != b.N_)
		throw dimension_error("matpoly mul: size mismatch");
	MatPoly r(a.N_, a.nvars(), a.cap());
	for (int i = 0; i < a.N_; ++i)
		for (int k = 0; k < a.N_; ++k) {
			const MPoly& v = a.at(i, k);
			if (v.is_zero())
				continue;
			for (int j = 0; j < a.N_; ++j)
				if (!b.at(k, j).is_zero())
					r.at(i, j) += v * b.at(k, j);
		}
	return r;
}

MatPoly MatPoly::scaled(const MPoly& f) const {
	MatPoly r(N_, nvars(), cap());
	for (int i = 0; i < N_; ++i)
		for (int j = 0; j < N_; ++j)
			if (!at(i, j).is_zero())
				r.at(i, j) = f * at(i, j);
	return r;
}

MatPoly MatPoly::scaled(const Rat& c) const {
	MatPoly r = *this;
	for (auto& p : r.e_)
		p = p.scaled(c);
	return r;
}

MatPoly MatPoly::partial(int i) const {
	MatPoly r = *this;
	for (auto& p : r.e_)
		p = p.partial(i);
	return r;
}

MatPoly MatPoly::degree_slice(int d) const {
	MatPoly r = *this;
	for (auto& p : r.e_)
		p = p.degree_slice(d);
	return r;
}

RatMat MatPoly::eval(const std::vector<Rat>& pt) const {
	RatMat r(N_);
	for (int i = 0; i < N_; ++i)
		for (int j = 0; j < N_; ++j)
			r.at(i, j) = at(i, j).eval(pt);
	return r;
}

RatMat MatPoly::eval_zero() const {
	RatMat r(N_);
	for (int i = 0; i < N_; ++i)
		for (int j = 0; j < N_; ++j)
			r.at(i, j) = at(i, j).constant_term();
	return r;
}

MatPoly MatPoly::inverse() const {
	// g = g(0)(I + h) with h(0) = 0, so g^-1 = (sum (-h)^k) g(0)^-1,
	// and the series terminates at the degree cap.
	RatMat c0 = eval_zero();
	RatMat b0 = c0.inverse();
	MatPoly h = MatPoly::from_const(b0, nvars(), cap()) * (*this);
	h -= MatPoly::identity(N_, nvars(), cap());
	MatPoly acc = MatPoly::identity(N_, nvars(), cap());
	MatPoly pw = MatPoly::identity(N_, nvars(), cap());
	for (int k = 1; k <= cap(); ++k) {
		pw = pw * (-h);
		if (pw.is_zero())
			break;
		acc += pw;
	}
	return acc * MatPoly::from_const(b0, nvars(), cap());
}

std::vector<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> M,
                                           std::vector<std::vector<Rat>> rhs_cols) {
	const std::size_t n = M.size();
	for (const auto& row : M)
		if (row.size() != n)
			throw dimension_error("solve_linear: matrix not square");
	std::vector<std::size_t> perm(n);
	for (std::size_t i = 0; i < n; ++i)
		perm[i] = i;
	for (std::size_t col = 0; col < n; ++col) {
		std::size_t piv = col;
		while (piv < n && M[piv][col].is_zero())
			++piv;
		if (piv == n)
			throw singular_error("singular linear system");
		std::swap(M[piv], M[col]);
		for (auto& rhs : rhs_cols)
			std::swap(rhs[piv], rhs[col]);
		Rat inv = Rat(1) / M[col][col];
		for (std::size_t j = col; j < n; ++j)
			M[col][j] *= inv;
		for (auto& rhs : rhs_cols)
			rhs[col] *= inv;
		for (std::size_t r = 0; r < n; ++r) {
			if (r == col || M[r][col].is_zero())
				continue;
			Rat f = M[r][col];
			for (std::size_t j = col; j < n; ++j)
				M[r][j] -= f * M[col][j];
			for (auto& rhs : rhs_cols)
				rhs[r] -= f * rhs[col];
		}
	}
	return rhs_cols;
}

int rank_of(std::vector<std::vector<Rat>> rows) {
	if (rows.empty())
		return 0;
	const std::size_t ncols = rows[0].size();
	int rank = 0;
	std::size_t row = 0;
	for (std::size_t col = 0; col < ncols && row < rows.size(); ++col) {
		std::size_t piv = row;
		while (piv < rows.size() && rows[piv][col].is_zero())
			++piv;
		if (piv == rows.size())
			continue;
		std::swap(rows[piv], rows[row]);
		Rat inv = Rat(1) / rows[row][col];
		for (std::size_t j = col; j < ncols; ++j)
			rows[row][j] *= inv;
		for (std::size_t r = 0; r < rows.size(); ++r) {
			if (r == row || rows[r][col].is_zero())
				continue;
			Rat f = rows[r][col];
			for (std::size_t j = col; j < ncols; ++j)
				rows[r][j] -= f * rows[row][j];
		}
		++row;
		++rank;
	}
	return rank;
}

std::vector<std::vector<Rat>> kernel_basis(std::vector<std::vector<Rat>> rows, int ncols) {
	// Row reduce, then read the kernel off the free columns.
	const std::size_t nc = (std::size_t)ncols;
	std::vector<std::size_t> pivot_col;
	std::size_t row = 0;
	for (std::size_t col = 0; col < nc && row < rows.size(); ++col) {
		std::size_t piv = row;
		while (piv < rows.size() && rows[piv][col].is_zero())
			++piv;
		if (piv == rows.size())
			continue;
		std::swap(rows[piv], rows[row]);
		Rat inv = Rat(1) / rows[row][col];
		for (std::size_t j = col; j < nc; ++j)
			rows[row][j] *= inv;
		for (std::size_t r = 0; r < rows.size(); ++r) {
			if (r == row || rows[r][col].is_zero())
				continue;
			Rat f = rows[r][col];
			for (std::size_t j = col; j < nc; ++j)
				rows[r][j] -= f * rows[row][j];
		}
		pivot_col.push_back(col);
		++row;
	}
	std::vector<bool> is_pivot(nc, false);
	for (auto c : pivot_col)
		is_pivot[c] = true;
	std::vector<std::vector<Rat>> basis;
	for (std::size_t free_col = 0; free_col < nc; ++free_col) {
		if (is_pivot[free_col])
			continue;
		std::vector<Rat> v(nc, Rat(0));
		v[free_col] = Rat(1);
		for (std::size_t r = 0; r < pivot_col.size(); ++r)
			v[pivot_col[r]] = -rows[r][free_col];
		basis.push_back(std::move(v));
	}
	return basis;
}

}
