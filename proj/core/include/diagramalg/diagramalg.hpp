#pragma once

#include "diagramalg/characters.hpp"
#include "diagramalg/coeff.hpp"
#include "diagramalg/diagrams.hpp"
#include "diagramalg/errors.hpp"
#include "diagramalg/irreps.hpp"
#include "diagramalg/partitions.hpp"
#include "diagramalg/symrep.hpp"
