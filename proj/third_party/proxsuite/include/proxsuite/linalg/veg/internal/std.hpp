#ifndef VEG_STD_HPP_NS3C5ON6S
#define VEG_STD_HPP_NS3C5ON6S

#ifdef __has_include
#define __VEG_HAS_INCLUDE(x) __has_include(x)
#else
#define __VEG_HAS_INCLUDE(x) 0
#endif

#include <cstdint>          // i64, u64
#include <initializer_list> // std::initializer_list

#endif /* end of include guard VEG_STD_HPP_NS3C5ON6S */
