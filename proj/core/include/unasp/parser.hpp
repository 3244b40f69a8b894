#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "unasp/syntax.hpp"

namespace unasp {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int col, const std::string& file = {})
      : std::runtime_error(compose(file, message, line, col)),
        detail_(message),
        line_(line),
        col_(col) {}

  // Message without the position prefix.
  const std::string& detail() const { return detail_; }
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  static std::string compose(const std::string& file, const std::string& message,
                             int line, int col) {
    std::string out;
    if (!file.empty()) out += file + ": ";
    if (line > 0) {
      out += "line " + std::to_string(line) + ", col " + std::to_string(col) + ": ";
    }
    return out + message;
  }

  std::string detail_;
  int line_;
  int col_;
};

// Grammar, one rule per statement:
//   rule     := [ label ":" ] literal [ (":-" | "<-") body ] [ "@" interval ] "."
//   body     := element { "," element }
//   element  := "not" literal | literal | interval
//   literal  := [ "-" ] ident [ "(" term { "," term } ")" ]
//   interval := "[" number "," number "]"
// "%" starts a comment running to the end of the line. ":-" wins over a
// label ":" when both readings apply. Rules without a label get r1, r2, ...
// in program order, skipping labels already taken. Weights and interval
// elements must be regular.
Program parse_program(std::string_view text);

// Reads the file and parses it; the path is included in error messages.
Program parse_file(const std::string& path);

}  // namespace unasp
