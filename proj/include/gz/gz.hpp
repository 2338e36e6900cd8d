#pragma once

#include "gz/chamber.hpp"
#include "gz/contraction.hpp"
#include "gz/digest.hpp"
#include "gz/eigen.hpp"
#include "gz/errors.hpp"
#include "gz/fiber.hpp"
#include "gz/field.hpp"
#include "gz/flow.hpp"
#include "gz/matrix.hpp"
#include "gz/parallel.hpp"
#include "gz/pattern.hpp"
#include "gz/poisson.hpp"
#include "gz/reconstruct.hpp"
#include "gz/rng.hpp"
#include "gz/sampling.hpp"
