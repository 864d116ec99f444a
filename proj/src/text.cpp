#include "qsh/text.hpp"

namespace qsh {

CharFileHeader read_char_header(std::istream& in) {
  std::string line;
  auto next = [&](std::size_t line_no) {
    if (!std::getline(in, line)) throw ParseError(0, "character file ends before header line " + std::to_string(line_no));
    if (!line.empty() && line.back() == '\r') line.pop_back();
  };
  next(1);
  if (line != kCharFileMagic) throw ParseError(0, "line 1: expected '" + std::string(kCharFileMagic) + "'");
  next(2);
  constexpr std::string_view window_tag = "#window ";
  if (line.rfind(window_tag, 0) != 0) throw ParseError(0, "line 2: expected '#window MIN..MAX L ALPHABET'");
  CharFileHeader header;
  header.window = Window::parse(std::string_view(line).substr(window_tag.size()));
  next(3);
  constexpr std::string_view scalar_tag = "#scalar ";
  if (line.rfind(scalar_tag, 0) != 0) throw ParseError(0, "line 3: expected '#scalar Q|Qt'");
  header.scalar = line.substr(scalar_tag.size());
  if (header.scalar != "Q" && header.scalar != "Qt") throw ParseError(scalar_tag.size(), "line 3: unknown scalar field");
  return header;
}

}  // namespace qsh
