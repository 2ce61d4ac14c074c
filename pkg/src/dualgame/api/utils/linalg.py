from typing import Tuple

import numpy as np


# Dense linear algebra kernel
class LinAlg:
    """
    Dense linear algebra kernel: linear functionals over scaled-orthogonal matrices,
    nuclear norm, Haar sampling and unit sphere sampling
    """

    # matrix condition diagnostics
    @staticmethod
    def get_condition_diagnostics(M: np.ndarray) -> str:
        """
        Get short description of matrix conditioning used in error messages

        Parameters
        ----------
        M : np.ndarray
            Matrix
        """
        M = np.asarray(M, dtype=float)
        try:
            cond = float(np.linalg.cond(M))
        except Exception:
            cond = float("nan")
        return (
            f"shape={M.shape}, "
            f"frobenius_norm={float(np.linalg.norm(M)):.6g}, "
            f"max_abs_entry={float(np.max(np.abs(M), initial=0.0)):.6g}, "
            f"condition_number={cond:.6g}"
        )

    # singular value decomposition
    @staticmethod
    def svd(
        M: np.ndarray, compute_uv: bool = True
    ) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        Singular value decomposition M = U*diag(w)*Vt

        Parameters
        ----------
        M : np.ndarray
            Square matrix
        compute_uv : bool, default True
            Whether to compute singular vectors. If False only singular values are returned.
        """
        M = np.asarray(M, dtype=float)
        if not np.all(np.isfinite(M)):
            raise ValueError(
                f"DualGame::svd(): matrix contains non-finite values! "
                f"{LinAlg.get_condition_diagnostics(np.nan_to_num(M))}"
            )
        try:
            return np.linalg.svd(M, compute_uv=compute_uv)
        except np.linalg.LinAlgError as err:
            raise RuntimeError(
                f"DualGame::svd(): SVD did not converge! "
                f"{LinAlg.get_condition_diagnostics(M)}"
            ) from err

    # Frobenius inner product
    @staticmethod
    def inner(P: np.ndarray, Q: np.ndarray) -> float:
        """
        Frobenius inner product <P,Q> = trace(P^T*Q)
        """
        return float(np.sum(np.asarray(P, dtype=float) * np.asarray(Q, dtype=float)))

    # nuclear norm
    @staticmethod
    def nuclear_norm(M: np.ndarray) -> float:
        """
        Sum of singular values

        Parameters
        ----------
        M : np.ndarray
            Square matrix
        """
        M = np.asarray(M, dtype=float)
        if M.shape == (1, 1):
            if not np.isfinite(M[0, 0]):
                raise ValueError(
                    "DualGame::nuclear_norm(): matrix contains non-finite values!"
                )
            return float(abs(M[0, 0]))
        return float(np.sum(LinAlg.svd(M, compute_uv=False)))

    # maximize <A,M> over A*A^T = alpha^2*I
    @staticmethod
    def procrustes_max(M: np.ndarray, alpha: float) -> Tuple[float, np.ndarray]:
        """
        Maximize linear functional <A,M> over scaled-orthogonal matrices A*A^T = alpha^2*I.
        Returns maximal value alpha*nuclear_norm(M) and maximizer alpha*U*Vt.
        For degenerate singular values only the value is unique,
        the maximizer is the one induced by the SVD routine.

        Parameters
        ----------
        M : np.ndarray
            Square coefficient matrix
        alpha : float
            Scale of the orthogonal matrices
        """
        if alpha < 0:
            raise ValueError(
                f"DualGame::procrustes_max(): scale should be non-negative, got {alpha}!"
            )
        M = np.asarray(M, dtype=float)
        if M.ndim != 2 or M.shape[0] != M.shape[1]:
            raise ValueError(
                f"DualGame::procrustes_max(): square matrix expected, got shape {M.shape}!"
            )
        if M.shape == (1, 1):
            if not np.isfinite(M[0, 0]):
                raise ValueError(
                    "DualGame::procrustes_max(): matrix contains non-finite values!"
                )
            sign = -1.0 if M[0, 0] < 0 else 1.0
            return float(alpha * abs(M[0, 0])), np.array([[alpha * sign]])
        u, w, vt = LinAlg.svd(M)
        return float(alpha * np.sum(w)), alpha * u.dot(vt)

    # check scaled orthogonality
    @staticmethod
    def is_scaled_orthogonal(M: np.ndarray, alpha: float, tol: float = 1e-9) -> bool:
        """
        Check M*M^T = alpha^2*I and M^T*M = alpha^2*I entrywise within tolerance

        Parameters
        ----------
        M : np.ndarray
            Square matrix
        alpha : float
            Scale
        tol : float, default 1e-9
            Absolute tolerance per entry
        """
        M = np.asarray(M, dtype=float)
        if M.ndim != 2 or M.shape[0] != M.shape[1]:
            return False
        target = alpha**2 * np.eye(M.shape[0])
        return bool(
            np.max(np.abs(M.dot(M.T) - target)) <= tol
            and np.max(np.abs(M.T.dot(M) - target)) <= tol
        )

    # Haar distributed orthogonal matrix
    @staticmethod
    def haar_orthogonal(n: int, rng: np.random.Generator) -> np.ndarray:
        """
        Haar distributed orthogonal matrix from QR decomposition of a standard normal matrix,
        with signs of the diagonal of R folded into the columns of Q

        Parameters
        ----------
        n : int
            Dimension
        rng : np.random.Generator
            Random stream
        """
        if n < 1:
            raise ValueError(f"DualGame::haar_orthogonal(): invalid dimension {n}!")
        q, r = np.linalg.qr(rng.standard_normal((n, n)))
        d = np.sign(np.diag(r))
        d[d == 0] = 1.0
        return q * d

    # uniform sample on the unit sphere
    @staticmethod
    def unit_sphere_sample(n: int, rng: np.random.Generator) -> np.ndarray:
        """
        Uniformly distributed unit vector

        Parameters
        ----------
        n : int
            Dimension
        rng : np.random.Generator
            Random stream
        """
        if n < 1:
            raise ValueError(f"DualGame::unit_sphere_sample(): invalid dimension {n}!")
        while True:
            v = rng.standard_normal(n)
            norm = np.linalg.norm(v)
            if norm > 0:
                return v / norm
