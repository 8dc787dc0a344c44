#pragma once

#include <string>
#include <string_view>

#include "invforge/errors.hpp"

namespace invforge {

enum class Family { GL, O, Sp };

// Adjacency flavor of the graphs attached to each family.
enum class Flavor { DirectedLoops, UndirectedLoops, UndirectedLoopless };

inline std::string to_string(Flavor flavor) {
  switch (flavor) {
    case Flavor::DirectedLoops: return "directed-loops";
    case Flavor::UndirectedLoops: return "undirected-loops";
    case Flavor::UndirectedLoopless: return "undirected-loopless";
  }
  return "?";
}

inline Flavor parse_flavor(std::string_view text) {
  if (text == "directed-loops") return Flavor::DirectedLoops;
  if (text == "undirected-loops") return Flavor::UndirectedLoops;
  if (text == "undirected-loopless") return Flavor::UndirectedLoopless;
  throw ParseError("unknown graph flavor '" + std::string(text) + "'");
}

inline Flavor flavor_for(Family family) {
  switch (family) {
    case Family::GL: return Flavor::DirectedLoops;
    case Family::O: return Flavor::UndirectedLoops;
    case Family::Sp: return Flavor::UndirectedLoopless;
  }
  return Flavor::DirectedLoops;
}

inline std::string to_string(Family family) {
  switch (family) {
    case Family::GL: return "gl";
    case Family::O: return "o";
    case Family::Sp: return "sp";
  }
  return "?";
}

inline Family parse_family(std::string_view text) {
  if (text == "gl" || text == "GL") return Family::GL;
  if (text == "o" || text == "O") return Family::O;
  if (text == "sp" || text == "Sp" || text == "SP") return Family::Sp;
  throw ParseError("unknown group '" + std::string(text) + "' (expected gl, o or sp)");
}

// A classical group with its rank parameter n. Sp(n) acts on C^{2n}.
class GroupKind {
 public:
  GroupKind(Family family, unsigned n) : family_(family), n_(n) {
    if (n == 0) throw WrongGroup("group rank must be at least 1");
  }

  static GroupKind gl(unsigned n) { return {Family::GL, n}; }
  static GroupKind o(unsigned n) { return {Family::O, n}; }
  static GroupKind sp(unsigned n) { return {Family::Sp, n}; }

  Family family() const { return family_; }
  unsigned rank() const { return n_; }
  unsigned dim_v() const { return family_ == Family::Sp ? 2 * n_ : n_; }
  Flavor flavor() const { return flavor_for(family_); }

  std::string to_string() const {
    switch (family_) {
      case Family::GL: return "GL(" + std::to_string(n_) + ")";
      case Family::O: return "O(" + std::to_string(n_) + ")";
      case Family::Sp: return "Sp(" + std::to_string(n_) + ")";
    }
    return "?";
  }

  friend bool operator==(const GroupKind&, const GroupKind&) = default;

 private:
  Family family_;
  unsigned n_;
};

}  // namespace invforge
