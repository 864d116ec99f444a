#include "qsh/characters.hpp"

namespace qsh {

std::string_view to_string(MapKind k) {
  switch (k) {
    case MapKind::plain: return "plain";
    case MapKind::character: return "character";
    case MapKind::infinitesimal: return "infinitesimal";
  }
  return "plain";
}

}  // namespace qsh
