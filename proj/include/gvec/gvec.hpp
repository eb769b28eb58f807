#pragma once

#include "gvec/field.hpp"
#include "gvec/matrix.hpp"
#include "gvec/polynomial.hpp"
#include "gvec/algebra.hpp"
#include "gvec/representation.hpp"
#include "gvec/projective.hpp"
#include "gvec/presentation.hpp"
#include "gvec/homological.hpp"
#include "gvec/gvector.hpp"
#include "gvec/component.hpp"
