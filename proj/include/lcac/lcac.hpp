#ifndef LCAC_LCAC_HPP
#define LCAC_LCAC_HPP

#include "lcac/auth.hpp"
#include "lcac/bch.hpp"
#include "lcac/bits.hpp"
#include "lcac/channel.hpp"
#include "lcac/gf256.hpp"
#include "lcac/ggd.hpp"
#include "lcac/grid.hpp"
#include "lcac/io.hpp"
#include "lcac/optimize.hpp"
#include "lcac/predict.hpp"
#include "lcac/profiles_data.hpp"
#include "lcac/rs.hpp"
#include "lcac/sha256.hpp"
#include "lcac/spec.hpp"

#endif
