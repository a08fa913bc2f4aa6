#ifndef WEYLPIECES_WEYLPIECES_HPP
#define WEYLPIECES_WEYLPIECES_HPP

#include "errors.hpp"
#include "index_set.hpp"
#include "oracle.hpp"
#include "parabolic.hpp"
#include "piece_maps.hpp"
#include "pieces.hpp"
#include "rootsys.hpp"
#include "twisted.hpp"
#include "weyl.hpp"

#endif // WEYLPIECES_WEYLPIECES_HPP
