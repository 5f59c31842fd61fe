#pragma once

#include <string>

#include "mm/instance.hpp"

namespace mm {

// Canonical document forms (also what the serializers emit):
//   instance: {"applicants":[{"id":"a1","capacity":1,"prefs":["h2","h1"]},...],
//              "houses":[{"id":"h1","capacity":2},...]}
//   matching: {"edges":[["a1","h2"],...]} sorted by declaration indices
//   change:   {"delta":{"h1":1,"h2":-1}}   omitted keys mean 0
// serialize(parse(doc)) == doc holds for canonical documents.

Instance parseInstance(const std::string& text);
std::string serializeInstance(const Instance& I);

Matching parseMatching(const Instance& I, const std::string& text);
std::string serializeMatching(const Instance& I, const Matching& M);

CapacityChange parseCapacityChange(const Instance& I, const std::string& text);
std::string serializeCapacityChange(const Instance& I, const CapacityChange& change);

std::string readFile(const std::string& path);
void writeFile(const std::string& path, const std::string& content);

}  // namespace mm
