#include "pathalg/parser.hpp"

#include <cctype>

#include "pathalg/errors.hpp"

namespace pathalg {

namespace {

struct Lexer {
	const std::string& src;
	std::size_t pos = 0;
	int line = 1, col = 1;

	explicit Lexer(const std::string& s) : src(s) {}

	void skip_ws() {
		while (pos < src.size() && std::isspace((unsigned char)src[pos])) {
			if (src[pos] == '\n') {
				++line;
				col = 1;
			} else {
				++col;
			}
			++pos;
		}
	}

	bool eof() {
		skip_ws();
		return pos >= src.size();
	}

	char peek() {
		skip_ws();
		return pos < src.size() ? src[pos] : '\0';
	}

	char take() {
		char c = peek();
		if (pos < src.size()) {
			++pos;
			++col;
		}
		return c;
	}

	[[noreturn]] void fail(const std::string& msg) {
		throw parse_error(line, col, msg);
	}

	void expect(char c) {
		if (peek() != c)
			fail(std::string("expected '") + c + "'");
		take();
	}

	BigInt read_uint() {
		skip_ws();
		if (pos >= src.size() || !std::isdigit((unsigned char)src[pos]))
			fail("expected a number");
		std::string digits;
		while (pos < src.size() && std::isdigit((unsigned char)src[pos])) {
			digits += src[pos];
			++pos;
			++col;
		}
		return BigInt(digits);
	}

	int read_index(const char* what) {
		BigInt v = read_uint();
		if (v < 1 || v > 1000000)
			fail(std::string(what) + " index out of range");
		return (int)v.convert_to<long long>();
	}
};

struct Parser {
	Lexer lex;

	explicit Parser(const std::string& s) : lex(s) {}

	OpExprPtr parse() {
		OpExprPtr e = expr();
		if (!lex.eof())
			lex.fail("unexpected trailing input");
		return e;
	}

	OpExprPtr expr() {
		OpExprPtr e;
		if (lex.peek() == '-') {
			lex.take();
			e = OpExpr::neg(term());
		} else {
			e = term();
		}
		while (true) {
			char c = lex.peek();
			if (c == '+') {
				lex.take();
				e = OpExpr::add(e, term());
			} else if (c == '-') {
				lex.take();
				e = OpExpr::sub(e, term());
			} else {
				return e;
			}
		}
	}

	OpExprPtr term() {
		OpExprPtr e = factor();
		while (lex.peek() == '*') {
			lex.take();
			e = OpExpr::mul(e, factor());
		}
		return e;
	}

	OpExprPtr factor() {
		OpExprPtr e = primary();
		while (lex.peek() == '^') {
			lex.take();
			BigInt k = lex.read_uint();
			if (k > 64)
				lex.fail("exponent too large");
			e = OpExpr::pow(e, (unsigned)k.convert_to<long long>());
		}
		return e;
	}

	OpExprPtr primary() {
		char c = lex.peek();
		if (c == '(') {
			lex.take();
			OpExprPtr e = expr();
			lex.expect(')');
			return e;
		}
		if (c == '[') {
			lex.take();
			OpExprPtr a = expr();
			lex.expect(',');
			OpExprPtr b = expr();
			lex.expect(']');
			return OpExpr::comm(a, b);
		}
		if (c == 'x')
			return lex.take(), OpExpr::var(lex.read_index("variable"));
		if (c == 'D')
			return lex.take(), OpExpr::gen(lex.read_index("generator"));
		if (std::isdigit((unsigned char)c)) {
			BigInt num = lex.read_uint();
			if (lex.peek() == '/') {
				lex.take();
				BigInt den = lex.read_uint();
				if (den == 0)
					lex.fail("zero denominator");
				return OpExpr::konst(Rat(num, den));
			}
			return OpExpr::konst(Rat(num));
		}
		lex.fail("expected a number, x<i>, D<i>, '[' or '('");
	}
};

}

OpExprPtr parse_expr(const std::string& src) {
	Parser p(src);
	return p.parse();
}

}
