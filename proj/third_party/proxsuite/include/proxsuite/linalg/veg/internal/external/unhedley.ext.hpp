#undef HEDLEY_VERSION
#undef HEDLEY_STRINGIFY_EX
#undef HEDLEY_STRINGIFY
#undef HEDLEY_CONCAT_EX
#undef HEDLEY_CONCAT
#undef HEDLEY_CONCAT3_EX
#undef HEDLEY_CONCAT3
#undef HEDLEY_VERSION_ENCODE
#undef HEDLEY_VERSION_DECODE_MAJOR
#undef HEDLEY_VERSION_DECODE_MINOR
#undef HEDLEY_VERSION_DECODE_REVISION
#undef HEDLEY_GNUC_VERSION
#undef HEDLEY_GNUC_VERSION_CHECK
#undef HEDLEY_MSVC_VERSION
#undef HEDLEY_MSVC_VERSION_CHECK
#undef HEDLEY_INTEL_VERSION
#undef HEDLEY_INTEL_VERSION_CHECK
#undef HEDLEY_INTEL_CL_VERSION
#undef HEDLEY_INTEL_CL_VERSION_CHECK
#undef HEDLEY_PGI_VERSION
#undef HEDLEY_PGI_VERSION_CHECK
#undef HEDLEY_SUNPRO_VERSION
#undef HEDLEY_SUNPRO_VERSION_CHECK
#undef HEDLEY_EMSCRIPTEN_VERSION
#undef HEDLEY_EMSCRIPTEN_VERSION_CHECK
#undef HEDLEY_ARM_VERSION
#undef HEDLEY_ARM_VERSION_CHECK
#undef HEDLEY_IBM_VERSION
#undef HEDLEY_IBM_VERSION_CHECK
#undef HEDLEY_TI_VERSION
#undef HEDLEY_TI_VERSION_CHECK
#undef HEDLEY_TI_CL2000_VERSION
#undef HEDLEY_TI_CL2000_VERSION_CHECK
#undef HEDLEY_TI_CL430_VERSION
#undef HEDLEY_TI_CL430_VERSION_CHECK
#undef HEDLEY_TI_ARMCL_VERSION
#undef HEDLEY_TI_ARMCL_VERSION_CHECK
#undef HEDLEY_TI_CL6X_VERSION
#undef HEDLEY_TI_CL6X_VERSION_CHECK
#undef HEDLEY_TI_CL7X_VERSION
#undef HEDLEY_TI_CL7X_VERSION_CHECK
#undef HEDLEY_TI_CLPRU_VERSION
#undef HEDLEY_TI_CLPRU_VERSION_CHECK
#undef HEDLEY_CRAY_VERSION
#undef HEDLEY_CRAY_VERSION_CHECK
#undef HEDLEY_IAR_VERSION
#undef HEDLEY_IAR_VERSION_CHECK
#undef HEDLEY_TINYC_VERSION
#undef HEDLEY_TINYC_VERSION_CHECK
#undef HEDLEY_DMC_VERSION
#undef HEDLEY_DMC_VERSION_CHECK
#undef HEDLEY_COMPCERT_VERSION
#undef HEDLEY_COMPCERT_VERSION_CHECK
#undef HEDLEY_PELLES_VERSION
#undef HEDLEY_PELLES_VERSION_CHECK
#undef HEDLEY_GCC_VERSION
#undef HEDLEY_GCC_VERSION_CHECK
#undef HEDLEY_HAS_ATTRIBUTE
#undef HEDLEY_GNUC_HAS_ATTRIBUTE
#undef HEDLEY_GCC_HAS_ATTRIBUTE
#undef HEDLEY_HAS_CPP_ATTRIBUTE
#undef HEDLEY_HAS_CPP_ATTRIBUTE_NS
#undef HEDLEY_GNUC_HAS_CPP_ATTRIBUTE
#undef HEDLEY_GCC_HAS_CPP_ATTRIBUTE
#undef HEDLEY_HAS_BUILTIN
#undef HEDLEY_GNUC_HAS_BUILTIN
#undef HEDLEY_GCC_HAS_BUILTIN
#undef HEDLEY_HAS_FEATURE
#undef HEDLEY_GNUC_HAS_FEATURE
#undef HEDLEY_GCC_HAS_FEATURE
#undef HEDLEY_HAS_EXTENSION
#undef HEDLEY_GNUC_HAS_EXTENSION
#undef HEDLEY_GCC_HAS_EXTENSION
#undef HEDLEY_HAS_DECLSPEC_ATTRIBUTE
#undef HEDLEY_GNUC_HAS_DECLSPEC_ATTRIBUTE
#undef HEDLEY_GCC_HAS_DECLSPEC_ATTRIBUTE
#undef HEDLEY_HAS_WARNING
#undef HEDLEY_GNUC_HAS_WARNING
#undef HEDLEY_GCC_HAS_WARNING
#undef HEDLEY_PRAGMA
#undef HEDLEY_DIAGNOSTIC_PUSH
#undef HEDLEY_DIAGNOSTIC_POP
#undef HEDLEY_DIAGNOSTIC_DISABLE_CPP98_COMPAT_WRAP_
#undef HEDLEY_CONST_CAST
#undef HEDLEY_REINTERPRET_CAST
#undef HEDLEY_STATIC_CAST
#undef HEDLEY_CPP_CAST
#undef HEDLEY_DIAGNOSTIC_DISABLE_DEPRECATED
#undef HEDLEY_DIAGNOSTIC_DISABLE_UNKNOWN_PRAGMAS
#undef HEDLEY_DIAGNOSTIC_DISABLE_UNKNOWN_CPP_ATTRIBUTES
#undef HEDLEY_DIAGNOSTIC_DISABLE_CAST_QUAL
#undef HEDLEY_DEPRECATED
#undef HEDLEY_DEPRECATED_FOR
#undef HEDLEY_UNAVAILABLE
#undef HEDLEY_WARN_UNUSED_RESULT
#undef HEDLEY_WARN_UNUSED_RESULT_MSG
#undef HEDLEY_SENTINEL
#undef HEDLEY_NO_RETURN
#undef HEDLEY_NO_ESCAPE
#undef HEDLEY_ASSUME
#undef HEDLEY_UNREACHABLE
#undef HEDLEY_UNREACHABLE_RETURN
#undef HEDLEY_NON_NULL
#undef HEDLEY_PRINTF_FORMAT
#undef HEDLEY_CONSTEXPR
#undef HEDLEY_UNPREDICTABLE
#undef HEDLEY_PREDICT
#undef HEDLEY_PREDICT_TRUE
#undef HEDLEY_PREDICT_FALSE
#undef HEDLEY_LIKELY
#undef HEDLEY_UNLIKELY
#undef HEDLEY_MALLOC
#undef HEDLEY_PURE
#undef HEDLEY_CONST
#undef HEDLEY_RESTRICT
#undef HEDLEY_INLINE
#undef HEDLEY_ALWAYS_INLINE
#undef HEDLEY_NEVER_INLINE
#undef HEDLEY_PRIVATE
#undef HEDLEY_PUBLIC
#undef HEDLEY_IMPORT
#undef HEDLEY_NO_THROW
#undef HEDLEY_FALL_THROUGH
#undef HEDLEY_RETURNS_NON_NULL
#undef HEDLEY_ARRAY_PARAM
#undef HEDLEY_IS_CONSTANT
#undef HEDLEY_IS_CONSTEXPR_
#undef HEDLEY_REQUIRE_CONSTEXPR
#undef HEDLEY_BEGIN_C_DECLS
#undef HEDLEY_END_C_DECLS
#undef HEDLEY_C_DECL
#undef HEDLEY_STATIC_ASSERT
#undef HEDLEY_NULL
#undef HEDLEY_MESSAGE
#undef HEDLEY_WARNING
#undef HEDLEY_REQUIRE
#undef HEDLEY_REQUIRE_MSG
#undef HEDLEY_FLAGS
#undef HEDLEY_FLAGS_CAST
#undef HEDLEY_EMPTY_BASES
#undef HEDLEY_GCC_NOT_CLANG_VERSION_CHECK
#undef HEDLEY_CLANG_HAS_ATTRIBUTE
#undef HEDLEY_CLANG_HAS_CPP_ATTRIBUTE
#undef HEDLEY_CLANG_HAS_BUILTIN
#undef HEDLEY_CLANG_HAS_FEATURE
#undef HEDLEY_CLANG_HAS_EXTENSION
#undef HEDLEY_CLANG_HAS_DECLSPEC_ATTRIBUTE
#undef HEDLEY_CLANG_HAS_WARNING
