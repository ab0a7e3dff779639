#ifndef NCAT_IO_HPP
#define NCAT_IO_HPP

#include <string>

#include "ncat/core.hpp"

namespace ncat {

// NCat file layout: {"n", "cells", "src", "tgt", "idn", "comp"} with comp
// keyed "j,i" and pair keys "later|earlier" (comp(later, earlier) means
// "earlier first").  NFunctor files carry "dom"/"cod" inline or as paths
// plus level-indexed "maps".  Keys are sorted on output.

std::string ncat_to_string(const NCat& a);
NCat ncat_from_string(const std::string& text);

void write_ncat(const std::string& path, const NCat& a);
NCat read_ncat(const std::string& path);

std::string nfunctor_to_string(const NFunctor& f);
// Paths in "dom"/"cod" are resolved relative to the functor file.
NFunctor nfunctor_from_string(const std::string& text, const std::string& base_dir = ".");

void write_nfunctor(const std::string& path, const NFunctor& f);
NFunctor read_nfunctor(const std::string& path);

}  // namespace ncat

#endif
