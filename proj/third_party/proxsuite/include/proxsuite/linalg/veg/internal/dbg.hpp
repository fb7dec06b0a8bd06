#ifndef VEG_FMT_HPP_GQU8XFRUS
#define VEG_FMT_HPP_GQU8XFRUS

#include "proxsuite/linalg/veg/type_traits/primitives.hpp"
#include "proxsuite/linalg/veg/internal/terminate.hpp"
#include "proxsuite/linalg/veg/type_traits/constructible.hpp"
#include "proxsuite/linalg/veg/ref.hpp"
#include "proxsuite/linalg/veg/type_traits/primitives.hpp"
#include "proxsuite/linalg/veg/internal/prologue.hpp"

#include <cstring>
#include <cstdio>

#include "proxsuite/linalg/veg/internal/epilogue.hpp"
#endif /* end of include guard VEG_FMT_HPP_GQU8XFRUS */
