/// Umbrella header.

#pragma once

#include "cxrval/ai.hpp"
#include "cxrval/bootstrap.hpp"
#include "cxrval/detection.hpp"
#include "cxrval/dicom.hpp"
#include "cxrval/dicom_write.hpp"
#include "cxrval/dicomweb.hpp"
#include "cxrval/error.hpp"
#include "cxrval/his.hpp"
#include "cxrval/labeler.hpp"
#include "cxrval/matcher.hpp"
#include "cxrval/metrics.hpp"
#include "cxrval/pipeline.hpp"
#include "cxrval/rng.hpp"
#include "cxrval/scorer.hpp"
#include "cxrval/study.hpp"
#include "cxrval/synth.hpp"
#include "cxrval/text.hpp"
#include "cxrval/timestamp.hpp"
#include "cxrval/xml.hpp"
