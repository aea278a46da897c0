#!/usr/bin/env python


from setuptools import setup, find_packages
import os
import multiprocessing, logging  # keeps "python setup.py test" quiet about the worker pools


__author__ = "cantorlab developers"
__copyright__ = "Copyright 2026, cantorlab developers"
__version__ = "0.1"
__maintainer__ = "cantorlab developers"
__email__ = "cantorlab@users.noreply.github.com"
__date__ = "Oct 16, 2026"

module_dir = os.path.dirname(os.path.abspath(__file__))

if __name__ == "__main__":
    setup(
        name='cantorlab',
        version='0.1.0',
        description='Exact and high-precision computations on base-conversion Cantor sequences',
        long_description=open(os.path.join(module_dir, 'README.rst')).read(),
        author='cantorlab developers',
        author_email='cantorlab@users.noreply.github.com',
        license='modified BSD',
        packages=find_packages(exclude=['examples', 'examples.*']),
        zip_safe=False,
        install_requires=['pyyaml>=3.11.0', 'monty>=0.8.1,<1.0', 'tabulate>=0.8.0', 'tqdm>=4.8.4',
                          'mpmath>=1.0.0', 'numpy>=1.12.0'],
        extras_require={'completion': ['argcomplete>=1.8.0']},
        classifiers=['Programming Language :: Python',
                     'Programming Language :: Python :: 3',
                     'Development Status :: 3 - Alpha',
                     'Intended Audience :: Science/Research',
                     'Operating System :: OS Independent',
                     'Topic :: Scientific/Engineering :: Mathematics'],
        test_suite='nose.collector',
        tests_require=['nose'],
        entry_points={
            'console_scripts': [
                'cantorlab = cantorlab.scripts.cantorlab_run:cantorlab'
            ]
        }
    )
