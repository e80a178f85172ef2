from setuptools import setup, find_packages


setup(
    name='milnor-py',

    # Versions should comply with PEP440.
    version='0.1.0',

    description="Milnor algebras, nil-polynomials and linear equivalence certificates",
    long_description="""
        Exact-arithmetic library and command line tool for the moduli algebras
        of quasi-homogeneous isolated hypersurface singularities, the
        nil-polynomials of their maximal ideals, and certificates of linear
        equivalence between those polynomials.
    """,

    license='MIT',

    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3',
    ],

    keywords='singularities milnor-algebra groebner-basis exact-arithmetic',

    packages=find_packages(exclude=['bin', 'test', 'examples']),

    install_requires=["sympy>=1.13", "pandas"],

    entry_points={
        'console_scripts': [
            'milnor = milnor.cli:main',
        ],
    },
)
