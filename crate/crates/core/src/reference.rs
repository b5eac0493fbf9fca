//! Published reference values for the standard configurations
//! (`α = 0.5`, `N = 30`, `ϱ = 1.5`, `L∞ = 5` unless noted).

/// The four kernels with their tuned support radii: Wendland(3,5), Wu(3,3),
/// oscillatory 3 and Buhmann 4.
pub const STANDARD_KERNELS: [(&str, f64); 4] = [
    ("wendland:3,5", 2.5),
    ("wu:3,3", 2.3),
    ("osc:3", 3.4),
    ("buhmann:4", 2.8),
];

/// `y(x)` at `PROFILE_SAMPLE_X`, one column per standard kernel.
/// The Wu entry at `x = 0.3` (0.65999935) is a misprint.
pub const PROFILE_Y: [[f64; 4]; 16] = [
    [0.88136427, 0.88136428, 0.88136409, 0.88136468],
    [0.76582809, 0.76582823, 0.76582774, 0.76582852],
    [0.65599963, 0.65999935, 0.65599915, 0.65600036],
    [0.55389758, 0.55389797, 0.55389693, 0.55389814],
    [0.46094112, 0.46094164, 0.46094037, 0.46094191],
    [0.37797968, 0.37798027, 0.37797895, 0.37798037],
    [0.30535020, 0.30535087, 0.30534921, 0.30535091],
    [0.24295205, 0.24295279, 0.24295099, 0.24295286],
    [0.19033171, 0.19033246, 0.19033052, 0.19033235],
    [0.14677064, 0.14677143, 0.14677694, 0.14677139],
    [0.08313306, 0.08313387, 0.08313169, 0.08313370],
    [0.04404326, 0.04404412, 0.04404186, 0.04404399],
    [0.01002990, 0.01003085, 0.01002839, 0.01003049],
    [0.00170828, 0.00170909, 0.00170673, 0.00170889],
    [0.00021351, 0.00021440, 0.00021195, 0.00021413],
    [0.00001696, 0.00001786, 0.00001540, 0.00001758],
];

/// `‖Res‖²` per standard kernel.
pub const RES_NORM_SQ: [f64; 4] = [1.3702e-08, 5.8431e-9, 2.4820e-08, 1.4394e-08];

/// `y'(0)` per standard kernel.
pub const INITIAL_SLOPE: [f64; 4] = [-1.191796, -1.191806, -1.191800, -1.191768];

pub const SLOPE_ALPHAS: [f64; 3] = [0.25, 0.5, 0.75];
pub const SLOPE_NS: [usize; 2] = [20, 30];

/// `y'(0)` indexed `[alpha][kernel][n]` over `SLOPE_ALPHAS`, `STANDARD_KERNELS`, `SLOPE_NS`.
pub const INITIAL_SLOPE_BY_ALPHA: [[[f64; 2]; 4]; 3] = [
    [
        [-1.15838196, -1.15658845],
        [-1.15868018, -1.15652004],
        [-1.16347841, -1.15658199],
        [-1.15914956, -1.15651901],
    ],
    [
        [-1.19674806, -1.19179615],
        [-1.19388602, -1.19180634],
        [-1.19468231, -1.19180040],
        [-1.19476755, -1.19176821],
    ],
    [
        [-1.23833094, -1.23998794],
        [-1.23307537, -1.24033353],
        [-1.23372756, -1.23980995],
        [-1.23493307, -1.23984689],
    ],
];

pub const DIAGNOSTIC_RADII: [f64; 9] = [1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0];

/// Percentage of zero entries of the 30×30 matrix per radius.
pub const ZERO_PERCENT: [f64; 9] = [64.44, 50.45, 38.55, 28.00, 19.33, 12.00, 6.33, 2.11, 0.00];

/// 2-norm condition numbers per radius, one column per standard kernel.
pub const CONDITION_NUMBER: [[f64; 4]; 9] = [
    [7.789055e04, 4.532194e04, 6.196000e03, 6.667960e03],
    [5.005580e06, 4.490489e05, 1.137094e05, 4.762594e04],
    [1.070687e08, 2.277201e06, 9.349735e05, 2.017929e05],
    [1.284523e09, 8.029373e06, 4.865744e06, 6.255295e05],
    [5.416534e09, 2.248322e07, 1.886481e07, 1.581147e06],
    [6.652775e10, 5.373891e07, 5.974023e07, 3.469944e06],
    [4.377016e10, 1.142168e08, 1.642163e08, 6.860756e06],
    [8.799029e10, 2.230297e08, 3.990271e08, 1.252852e07],
    [1.338415e12, 4.055797e08, 8.539759e08, 2.148696e07],
];
