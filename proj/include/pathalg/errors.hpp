#pragma once

#include <stdexcept>
#include <string>

namespace pathalg {

struct error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct dimension_error : error {
	using error::error;
};

struct domain_error : error {
	using error::error;
};

struct not_lie_error : domain_error {
	using domain_error::domain_error;
};

struct not_in_p_error : domain_error {
	using domain_error::domain_error;
};

struct singular_error : domain_error {
	using domain_error::domain_error;
};

struct parse_error : error {
	int line;
	int col;
	parse_error(int line_, int col_, const std::string& what_)
		: error("syntax error at line " + std::to_string(line_) + ", column " +
		        std::to_string(col_) + ": " + what_),
		  line(line_), col(col_) {}
};

}
